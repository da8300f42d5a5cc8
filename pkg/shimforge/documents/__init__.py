"""
Documents Module

Versioned YAML documents for fields, data and rigidity certificates.
"""
from shimforge.documents.codec import (
    CertificateDocument,
    DatumReport,
    DocumentKind,
    certificate_document,
    datum_document,
    field_document,
    load_document,
    parse,
    serialize,
)
from shimforge.documents.replay import replay_document

__all__ = [
    "CertificateDocument",
    "DatumReport",
    "DocumentKind",
    "certificate_document",
    "datum_document",
    "field_document",
    "load_document",
    "parse",
    "serialize",
    "replay_document",
]

"""
Replay of stored documents from the field block upward.
"""
from __future__ import annotations

from shimforge.conjugator.rigidity import replay_certificate, replay_field
from shimforge.documents.codec import CertificateDocument, DatumReport
from shimforge.utils.logger import log


def replay_document(document: CertificateDocument) -> list[str]:
    """
    Recompute everything a document claims.

    Returns the names of the blocks that failed; empty means the document replays.
    """
    mismatches = []
    if not replay_field(document.field):
        mismatches.append("field")
    if document.datum is not None and DatumReport.of(document.datum) != document.report:
        mismatches.append("report")
    if document.certificate is not None:
        certificate = document.certificate
        if DatumReport.of(certificate.conjugate) != document.conjugate_report:
            mismatches.append("conjugate_report")
        if not replay_certificate(certificate):
            mismatches.append("certificate")
    for block in mismatches:
        log.warning(f"replay mismatch in {block} block of {document.kind.value} document")
    return mismatches

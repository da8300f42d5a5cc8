"""
Conjugator Module

Conjugation of data by automorphisms of C and rigidity certificates.
"""
from shimforge.conjugator.certificate_types import (
    AutControl,
    AutControlKind,
    CertificateChecks,
    MarkingRecord,
    RigidityCertificate,
    Verdict,
)
from shimforge.conjugator.conjugate import conjugate_datum, partition_moved, propose_tau
from shimforge.conjugator.rigidity import (
    finite_local_tags,
    issue_certificate,
    replay_certificate,
    replay_field,
    verify_marking,
)

__all__ = [
    "AutControl",
    "AutControlKind",
    "CertificateChecks",
    "MarkingRecord",
    "RigidityCertificate",
    "Verdict",
    "conjugate_datum",
    "partition_moved",
    "propose_tau",
    "finite_local_tags",
    "issue_certificate",
    "replay_certificate",
    "replay_field",
    "verify_marking",
]

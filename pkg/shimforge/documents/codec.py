"""
Certificate documents: versioned YAML with nested blocks.

Arithmetic values (definer coefficients, interval endpoints, primes,
residues) are decimal strings so they survive any YAML reader at full
precision. Structural counts stay plain integers.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import yaml

from shimforge import __version__
from shimforge.arithmetic.finite_field import DegreePattern
from shimforge.arithmetic.polynomial import IntPolynomial, RootIsolation
from shimforge.config.settings import SCHEMA_VERSION, TOOL_NAME
from shimforge.conjugator.certificate_types import (
    AutControl,
    CertificateChecks,
    MarkingRecord,
    RigidityCertificate,
    Verdict,
)
from shimforge.errors import DocumentError
from shimforge.fields.field_types import GaloisCertificate, SplitPrimeWitness, TotallyRealField
from shimforge.forms.calculators import (
    compactness,
    conjugate_partitions,
    dimension,
    real_rank,
    reflex_degree_quaternionic,
)
from shimforge.forms.form_types import (
    CMRecord,
    Compactness,
    DatumKind,
    QuaternionDatum,
    ShimuraDatumDescriptor,
    TypeDDatum,
    UnitaryDatum,
)
from shimforge.places.permutations import PlacePermutation, realizability_note
from shimforge.places.place_types import FinitePlace, RealPlace, Realizability
from shimforge.utils.helpers import parse_signatures


class DocumentKind(Enum):
    FIELD = "field"
    DATUM = "datum"
    CERTIFICATE = "certificate"


@dataclass(frozen=True)
class DatumReport:
    """
    Derived numbers stored next to a datum and re-checked on replay.

    Quaternionic data over an S_d-certified field also carry the orbit of
    their definite-place set and its size, the reflex degree.
    """
    dimension: int
    real_rank: int
    compactness: Compactness
    reflex_degree: Optional[int] = None
    definite_orbit: tuple[frozenset[RealPlace], ...] = ()

    @classmethod
    def of(cls, descriptor: ShimuraDatumDescriptor) -> DatumReport:
        datum = descriptor.datum
        report = cls(dimension(descriptor), real_rank(descriptor), compactness(descriptor))
        if not isinstance(datum, QuaternionDatum):
            return report
        if realizability_note(datum.field) is not Realizability.FULL_SYMMETRIC:
            return report
        return replace(
            report,
            reflex_degree=reflex_degree_quaternionic(datum),
            definite_orbit=tuple(conjugate_partitions(datum)),
        )


@dataclass(frozen=True)
class CertificateDocument:
    kind: DocumentKind
    field: TotallyRealField
    datum: Optional[ShimuraDatumDescriptor] = None
    report: Optional[DatumReport] = None
    certificate: Optional[RigidityCertificate] = None
    conjugate_report: Optional[DatumReport] = None
    seed: Optional[int] = None
    schema_version: str = SCHEMA_VERSION
    tool_version: str = __version__


def field_document(field: TotallyRealField, seed: Optional[int] = None) -> CertificateDocument:
    return CertificateDocument(kind=DocumentKind.FIELD, field=field, seed=seed)


def datum_document(
    descriptor: ShimuraDatumDescriptor, seed: Optional[int] = None
) -> CertificateDocument:
    return CertificateDocument(
        kind=DocumentKind.DATUM,
        field=descriptor.field,
        datum=descriptor,
        report=DatumReport.of(descriptor),
        seed=seed,
    )


def certificate_document(
    certificate: RigidityCertificate, seed: Optional[int] = None
) -> CertificateDocument:
    return CertificateDocument(
        kind=DocumentKind.CERTIFICATE,
        field=certificate.datum.field,
        datum=certificate.datum,
        report=DatumReport.of(certificate.datum),
        certificate=certificate,
        conjugate_report=DatumReport.of(certificate.conjugate),
        seed=seed,
    )


# Encoding

def _encode_field(field: TotallyRealField) -> dict:
    galois = None
    if field.aut_certificate is not None:
        cert = field.aut_certificate
        galois = {
            name: {"p": str(p), "pattern": str(pattern)} for name, p, pattern in cert.witnesses()
        }
        galois["conclusion"] = cert.conclusion
    return {
        "degree": field.degree,
        "definer": [str(c) for c in field.definer.coefficients],
        "embeddings": [[str(lo), str(hi)] for lo, hi in field.embeddings],
        "galois": galois,
        "split_primes": [
            {"p": str(w.p), "residues": [str(r) for r in w.residues]} for w in field.split_witnesses
        ],
    }


def _encode_marks(marks) -> dict:
    return {str(place): tag.value for place, tag in marks}


def _encode_datum(descriptor: ShimuraDatumDescriptor) -> dict:
    datum = descriptor.datum
    block: dict[str, Any] = {"kind": descriptor.kind.value}
    if isinstance(datum, QuaternionDatum):
        block["ram_infinite"] = sorted(v.index for v in datum.ram_infinite)
        block["ram_finite"] = [str(place) for place in sorted(datum.ram_finite)]
    elif isinstance(datum, UnitaryDatum):
        block["n"] = datum.n
        block["signatures"] = ":".join(f"{p},{q}" for p, q in datum.signatures)
        block["finite_marks"] = _encode_marks(datum.finite_marks)
        block["cm"] = {"inert_primes": [str(p) for p in datum.cm.inert_primes], "note": datum.cm.note}
        block["isotropic"] = datum.isotropic
    else:
        block["n"] = datum.n
        block["s_real"] = sorted(v.index for v in datum.s_real)
        block["s_quaternionic"] = sorted(v.index for v in datum.s_quaternionic)
        block["finite_marks"] = _encode_marks(datum.finite_marks)
        block["b_ram_finite"] = [str(place) for place in sorted(datum.b_ram_finite)]
    block["existence_assumption"] = descriptor.existence_assumption
    return block


def _encode_report(report: DatumReport) -> dict:
    block = {
        "dimension": report.dimension,
        "real_rank": report.real_rank,
        "compactness": report.compactness.value,
    }
    if report.reflex_degree is not None:
        block["reflex_degree"] = report.reflex_degree
        block["definite_orbit"] = [
            sorted(v.index for v in places) for places in report.definite_orbit
        ]
    return block


def _encode_certificate(certificate: RigidityCertificate) -> dict:
    checks = certificate.checks
    marking = None
    if certificate.marking is not None:
        marking = {"p": str(certificate.marking.p), "marked_place": str(certificate.marking.marked_place)}
    return {
        "permutation": str(certificate.permutation),
        "marking": marking,
        "checks": {
            "rank_ok": checks.rank_ok,
            "rank_value": checks.rank_value,
            "partition_moved": checks.partition_moved,
            "aut_control": None if checks.aut_control is None else str(checks.aut_control),
            "realizability": checks.realizability.value,
            "tau_asserted": checks.tau_asserted,
        },
        "verdict": str(certificate.verdict),
    }


def to_mapping(document: CertificateDocument) -> dict:
    data: dict[str, Any] = {
        "schema_version": document.schema_version,
        "kind": document.kind.value,
        "field": _encode_field(document.field),
    }
    if document.datum is not None:
        data["datum"] = _encode_datum(document.datum)
        data["report"] = _encode_report(document.report)
    if document.certificate is not None:
        data.update(_encode_certificate(document.certificate))
        data["conjugate"] = _encode_datum(document.certificate.conjugate)
        data["conjugate_report"] = _encode_report(document.conjugate_report)
    data["provenance"] = {
        "tool": TOOL_NAME,
        "version": document.tool_version,
        "seed": None if document.seed is None else str(document.seed),
    }
    return data


def serialize(document: CertificateDocument) -> str:
    return yaml.safe_dump(to_mapping(document), sort_keys=False, default_flow_style=False)


# Decoding

def _decode_field(block: dict) -> TotallyRealField:
    galois = None
    if block.get("galois") is not None:
        witnesses = block["galois"]
        galois = GaloisCertificate(
            degree=int(block["degree"]),
            p_transitive=int(witnesses["transitive"]["p"]),
            pattern_transitive=DegreePattern.parse(str(witnesses["transitive"]["pattern"])),
            p_cycle=int(witnesses["cycle"]["p"]),
            pattern_cycle=DegreePattern.parse(str(witnesses["cycle"]["pattern"])),
            p_transposition=int(witnesses["transposition"]["p"]),
            pattern_transposition=DegreePattern.parse(str(witnesses["transposition"]["pattern"])),
            conclusion=str(witnesses["conclusion"]),
        )
    return TotallyRealField(
        degree=int(block["degree"]),
        definer=IntPolynomial(tuple(int(c) for c in block["definer"])),
        embeddings=RootIsolation(
            tuple((Fraction(str(lo)), Fraction(str(hi))) for lo, hi in block["embeddings"])
        ),
        aut_certificate=galois,
        split_witnesses=tuple(
            SplitPrimeWitness(int(w["p"]), tuple(int(r) for r in w["residues"]))
            for w in block.get("split_primes") or []
        ),
    )


def _decode_marks(block: Optional[dict]) -> dict:
    return {FinitePlace.parse(place): tag for place, tag in (block or {}).items()}


def _decode_datum(block: dict, field: TotallyRealField) -> ShimuraDatumDescriptor:
    kind = DatumKind(block["kind"])
    if kind is DatumKind.QUATERNIONIC:
        datum = QuaternionDatum(
            field=field,
            ram_infinite=block.get("ram_infinite") or [],
            ram_finite=frozenset(FinitePlace.parse(p) for p in block.get("ram_finite") or []),
        )
    elif kind is DatumKind.UNITARY:
        cm = block.get("cm") or {}
        datum = UnitaryDatum(
            field=field,
            n=int(block["n"]),
            signatures=parse_signatures(block["signatures"]),
            finite_marks=_decode_marks(block.get("finite_marks")),
            cm=CMRecord(
                inert_primes=tuple(int(p) for p in cm.get("inert_primes") or []),
                **({"note": str(cm["note"])} if "note" in cm else {}),
            ),
            isotropic=bool(block.get("isotropic", False)),
        )
    else:
        datum = TypeDDatum(
            field=field,
            n=int(block["n"]),
            s_real=block["s_real"],
            s_quaternionic=block["s_quaternionic"],
            finite_marks=_decode_marks(block.get("finite_marks")),
            b_ram_finite=frozenset(FinitePlace.parse(p) for p in block.get("b_ram_finite") or []),
        )
    if "existence_assumption" in block:
        return ShimuraDatumDescriptor(datum, str(block["existence_assumption"]))
    return ShimuraDatumDescriptor(datum)


def _decode_report(block: dict) -> DatumReport:
    reflex = block.get("reflex_degree")
    return DatumReport(
        dimension=int(block["dimension"]),
        real_rank=int(block["real_rank"]),
        compactness=Compactness(block["compactness"]),
        reflex_degree=None if reflex is None else int(reflex),
        definite_orbit=tuple(
            frozenset(RealPlace(int(i)) for i in places)
            for places in block.get("definite_orbit", [])
        ),
    )


def _decode_certificate(data: dict, descriptor: ShimuraDatumDescriptor) -> RigidityCertificate:
    checks = data["checks"]
    marking = None
    if data.get("marking") is not None:
        marking = MarkingRecord(
            p=int(data["marking"]["p"]),
            marked_place=FinitePlace.parse(data["marking"]["marked_place"]),
        )
    return RigidityCertificate(
        datum=descriptor,
        permutation=PlacePermutation.parse(str(data["permutation"])),
        conjugate=_decode_datum(data["conjugate"], descriptor.field),
        checks=CertificateChecks(
            rank_ok=bool(checks["rank_ok"]),
            rank_value=int(checks["rank_value"]),
            partition_moved=bool(checks["partition_moved"]),
            aut_control=None if checks["aut_control"] is None else AutControl.parse(checks["aut_control"]),
            realizability=Realizability(checks["realizability"]),
            tau_asserted=bool(checks.get("tau_asserted", False)),
        ),
        verdict=Verdict.parse(str(data["verdict"])),
        marking=marking,
    )


def from_mapping(data: Any) -> CertificateDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a mapping")
    try:
        schema_version = str(data["schema_version"])
        if schema_version != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {schema_version!r}")
        kind = DocumentKind(data["kind"])
        field = _decode_field(data["field"])
        descriptor = report = certificate = conjugate_report = None
        if kind is not DocumentKind.FIELD:
            descriptor = _decode_datum(data["datum"], field)
            report = _decode_report(data["report"])
        if kind is DocumentKind.CERTIFICATE:
            certificate = _decode_certificate(data, descriptor)
            conjugate_report = _decode_report(data["conjugate_report"])
        provenance = data["provenance"]
        seed = provenance.get("seed")
        return CertificateDocument(
            kind=kind,
            field=field,
            datum=descriptor,
            report=report,
            certificate=certificate,
            conjugate_report=conjugate_report,
            seed=None if seed is None else int(seed),
            schema_version=schema_version,
            tool_version=str(provenance["version"]),
        )
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, LookupError) as exc:
        raise DocumentError(f"malformed {data.get('kind', 'unknown')} document: {exc!r}") from exc


def parse(text: str) -> CertificateDocument:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise DocumentError(f"not a YAML document: {exc}") from exc
    return from_mapping(data)


def load_document(path: Path) -> CertificateDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse(text)

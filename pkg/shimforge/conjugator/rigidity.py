"""
Rigidity certificates.

A Granted certificate records that the hypotheses of the super-rigidity
corollary verifiably hold for a datum and its conjugate: real rank at least
2, the labelled partition of real places is moved, field automorphisms are
ruled out, and pi is induced by some tau. Nonisomorphism of the arithmetic
fundamental groups is the cited consequence and is not re-proved here.
"""
from __future__ import annotations

from typing import Optional, Sequence

from shimforge.arithmetic.polynomial import interval_isolates_root
from shimforge.errors import InvalidDatum, PreconditionError, ShimforgeError
from shimforge.fields.field_types import TotallyRealField
from shimforge.fields.forge import replay_split_witness
from shimforge.fields.galois import replay_galois_certificate
from shimforge.forms.calculators import real_rank, validate_construction_conditions
from shimforge.forms.form_types import QuaternionDatum, ShimuraDatumDescriptor, UnitaryDatum
from shimforge.conjugator.certificate_types import (
    AUT_CONTROL,
    PARTITION_MOVED,
    RANK,
    REALIZABILITY,
    AutControl,
    AutControlKind,
    CertificateChecks,
    MarkingRecord,
    RigidityCertificate,
    Verdict,
)
from shimforge.conjugator.conjugate import conjugate_datum, partition_moved
from shimforge.places.permutations import PlacePermutation, realizability_note
from shimforge.places.place_types import FinitePlace, Realizability
from shimforge.utils.logger import log

RAMIFIED = "ramified"
UNRAMIFIED = "unramified"


def finite_local_tags(descriptor: ShimuraDatumDescriptor, p: int) -> tuple[Optional[str], ...]:
    """
    Local tag at each of the d places over a split prime p; None where the
    datum records nothing that tells places apart.
    """
    field = descriptor.field
    field.split_witness(p)
    datum = descriptor.datum
    places = [FinitePlace(p, slot) for slot in range(1, field.degree + 1)]

    if isinstance(datum, QuaternionDatum):
        return tuple(RAMIFIED if place in datum.ram_finite else UNRAMIFIED for place in places)
    if isinstance(datum, UnitaryDatum):
        if datum.n % 2 or p not in datum.cm.inert_primes:
            return tuple(None for _ in places)
    elif any(place.p == p for place in datum.b_ram_finite):
        return tuple(None for _ in places)
    marks = datum.marks
    return tuple(marks[place].value if place in marks else None for place in places)


def verify_marking(
    field: TotallyRealField, marking: MarkingRecord, finite_data: Sequence[Optional[str]]
) -> bool:
    """
    True iff every slot is tagged and the marked slot's tag occurs nowhere else.

    An untagged slot counts as possibly equal to the marked tag, so a single
    missing tag fails the check even when all known tags differ from it.
    """
    field.split_witness(marking.p)
    if len(finite_data) != field.degree:
        raise PreconditionError(f"{len(finite_data)} local tags for {field.degree} places")
    if marking.marked_place.slot > field.degree:
        return False
    if any(tag is None for tag in finite_data):
        return False
    marked = finite_data[marking.marked_place.slot - 1]
    return list(finite_data).count(marked) == 1


def _aut_control(
    descriptor: ShimuraDatumDescriptor, marking: Optional[MarkingRecord]
) -> Optional[AutControl]:
    field = descriptor.field
    if field.is_certified:
        return AutControl(AutControlKind.CERTIFIED_TRIVIAL_AUT)
    if marking is not None:
        tags = finite_local_tags(descriptor, marking.p)
        if verify_marking(field, marking, tags):
            return AutControl(AutControlKind.FINITE_MARKING, marking.marked_place)
        log.debug(f"marking at {marking.marked_place} not unique among tags {tags}")
    return None


def issue_certificate(
    descriptor: ShimuraDatumDescriptor,
    pi: PlacePermutation,
    marking: Optional[MarkingRecord] = None,
    assert_realizable: bool = False,
) -> RigidityCertificate:
    """
    Grant or refuse a rigidity certificate for (datum, pi).

    Raises:
        InvalidDatum: the datum fails condition (i) or (ii)
        DegreeMismatch: pi has the wrong degree
    """
    violations = validate_construction_conditions(descriptor)
    if violations:
        raise InvalidDatum(violations)

    conjugate = conjugate_datum(descriptor, pi)
    rank = real_rank(descriptor)
    checks = CertificateChecks(
        rank_ok=rank >= 2,
        rank_value=rank,
        partition_moved=partition_moved(descriptor, pi),
        aut_control=_aut_control(descriptor, marking),
        realizability=realizability_note(descriptor.field),
        tau_asserted=assert_realizable,
    )

    reasons = []
    if not checks.rank_ok:
        reasons.append(RANK)
    if not checks.partition_moved:
        reasons.append(PARTITION_MOVED)
    if checks.aut_control is None:
        reasons.append(AUT_CONTROL)
    if checks.realizability is not Realizability.FULL_SYMMETRIC and not checks.tau_asserted:
        reasons.append(REALIZABILITY)
    verdict = Verdict(tuple(reasons))

    log.info(f"{descriptor.kind.value} datum, pi={pi}: {verdict}")
    return RigidityCertificate(
        datum=descriptor,
        permutation=pi,
        conjugate=conjugate,
        checks=checks,
        verdict=verdict,
        marking=marking,
    )


def replay_field(field: TotallyRealField) -> bool:
    """Re-verify a field's stored embeddings and witnesses from its definer."""
    f = field.definer
    if not all(interval_isolates_root(f, interval) for interval in field.embeddings):
        return False
    intervals = list(field.embeddings)
    if any(left[1] >= right[0] for left, right in zip(intervals, intervals[1:])):
        return False
    if field.aut_certificate is not None and not replay_galois_certificate(f, field.aut_certificate):
        return False
    return all(replay_split_witness(f, witness) for witness in field.split_witnesses)


def replay_certificate(certificate: RigidityCertificate) -> bool:
    """Recompute the certificate from its datum, permutation and marking."""
    if not replay_field(certificate.datum.field):
        return False
    try:
        recomputed = issue_certificate(
            certificate.datum,
            certificate.permutation,
            certificate.marking,
            certificate.checks.tau_asserted,
        )
    except (ShimforgeError, ValueError) as exc:
        log.warning(f"certificate replay failed: {exc}")
        return False
    return recomputed == certificate

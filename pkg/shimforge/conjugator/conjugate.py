"""
Conjugation of a datum by tau in Aut(C).

Real-place local data pull back along pi: the conjugate's data at v is the
original data at pi(v) = tau o v. Finite data are copied unchanged.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Optional

from shimforge.errors import DegreeMismatch
from shimforge.forms.calculators import local_real_data
from shimforge.forms.form_types import QuaternionDatum, ShimuraDatumDescriptor, UnitaryDatum
from shimforge.places.permutations import PlacePermutation, preserves_subset


def _require_degree(descriptor: ShimuraDatumDescriptor, pi: PlacePermutation) -> None:
    if pi.degree != descriptor.field.degree:
        raise DegreeMismatch(
            f"permutation of degree {pi.degree} on a field of degree {descriptor.field.degree}"
        )


def conjugate_datum(descriptor: ShimuraDatumDescriptor, pi: PlacePermutation) -> ShimuraDatumDescriptor:
    _require_degree(descriptor, pi)
    datum = descriptor.datum
    if isinstance(datum, QuaternionDatum):
        conjugate = replace(datum, ram_infinite=pi.pullback(datum.ram_infinite))
    elif isinstance(datum, UnitaryDatum):
        conjugate = replace(
            datum, signatures=tuple(datum.signatures[image - 1] for image in pi.images)
        )
    else:
        conjugate = replace(
            datum,
            s_real=pi.pullback(datum.s_real),
            s_quaternionic=pi.pullback(datum.s_quaternionic),
        )
    return replace(descriptor, datum=conjugate)


def partition_moved(descriptor: ShimuraDatumDescriptor, pi: PlacePermutation) -> bool:
    """True iff pi does not preserve the partition of real places by local type."""
    _require_degree(descriptor, pi)
    datum = descriptor.datum
    if isinstance(datum, QuaternionDatum):
        return not preserves_subset(pi, datum.ram_infinite)
    local = local_real_data(descriptor)
    return any(local[image - 1] != local[i] for i, image in enumerate(pi.images))


def propose_tau(descriptor: ShimuraDatumDescriptor) -> Optional[PlacePermutation]:
    """
    Lexicographically smallest transposition (vi vj) of real places with
    different local data; None when every place carries the same data.
    """
    local = local_real_data(descriptor)
    d = len(local)
    for i in range(d):
        for j in range(i + 1, d):
            if local[i] != local[j]:
                return PlacePermutation.transposition(d, i + 1, j + 1)
    return None

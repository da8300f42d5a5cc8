"""
Real rank, dimension and compactness of the family data, the construction
conditions (i) and (ii), and reflex degrees of quaternionic data.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Optional

from sympy import binomial
from sympy.combinatorics.named_groups import SymmetricGroup

from shimforge.config.settings import BRUTE_FORCE_MAX_DEGREE
from shimforge.errors import CertificateRequired, PreconditionError
from shimforge.forms.form_types import (
    Compactness,
    QuaternionDatum,
    ShimuraDatumDescriptor,
    TypeDDatum,
    UnitaryDatum,
    Violation,
)
from shimforge.places.permutations import realizability_note
from shimforge.places.place_types import RealPlace, Realizability, real_places

# Local real forms
DEFINITE = "definite"
INDEFINITE = "indefinite"
BD_I = "BD I(q=2)"
D_III = "D III"


def local_real_data(descriptor: ShimuraDatumDescriptor) -> tuple:
    """Local isomorphism class at each real place v1..vd."""
    datum = descriptor.datum
    places = [RealPlace(i) for i in datum.field.real_places]
    if isinstance(datum, QuaternionDatum):
        return tuple(DEFINITE if v in datum.ram_infinite else INDEFINITE for v in places)
    if isinstance(datum, UnitaryDatum):
        return datum.signatures
    return tuple(BD_I if v in datum.s_real else D_III for v in places)


def real_rank(descriptor: ShimuraDatumDescriptor) -> int:
    datum = descriptor.datum
    if isinstance(datum, QuaternionDatum):
        return datum.field.degree - len(datum.ram_infinite)
    if isinstance(datum, UnitaryDatum):
        return sum(q for _, q in datum.signatures)
    return 2 * len(datum.s_real) + (datum.n // 2) * len(datum.s_quaternionic)


def dimension(descriptor: ShimuraDatumDescriptor) -> int:
    """Complex dimension of the symmetric domain."""
    datum = descriptor.datum
    if isinstance(datum, QuaternionDatum):
        return datum.field.degree - len(datum.ram_infinite)
    if isinstance(datum, UnitaryDatum):
        return sum(p * q for p, q in datum.signatures)
    n = datum.n
    return len(datum.s_real) * (2 * n - 2) + len(datum.s_quaternionic) * n * (n - 1) // 2


def compactness(descriptor: ShimuraDatumDescriptor) -> Compactness:
    datum = descriptor.datum
    if isinstance(datum, QuaternionDatum):
        return Compactness.COMPACT if datum.ram_infinite else Compactness.UNDETERMINED
    if isinstance(datum, UnitaryDatum):
        if any(q == 0 for _, q in datum.signatures):
            return Compactness.COMPACT
        if datum.isotropic:
            return Compactness.NONCOMPACT_WITNESSED
        return Compactness.UNDETERMINED
    # SU(A) contains SU(a1, -a1) for the chosen skew-hermitian form
    return Compactness.NONCOMPACT_WITNESSED


def validate_construction_conditions(descriptor: ShimuraDatumDescriptor) -> list[Violation]:
    """
    Check (i) the local real data are not all identical, and (ii) the real
    rank is at least 2. Returns the violations, empty when both hold.
    """
    violations = []
    local = local_real_data(descriptor)
    if len(set(local)) < 2:
        violations.append(Violation("(i)", f"all real places carry the same local data {local[0]}"))
    rank = real_rank(descriptor)
    if rank < 2:
        violations.append(Violation("(ii)", f"rank {rank} < 2"))
    return violations


def stabilizer_index(d: int, subset) -> int:
    """[S_d : Stab(subset)] by enumeration, checked against binomial(d, |subset|)."""
    places = real_places(subset)
    if any(v.index > d for v in places):
        raise PreconditionError(f"subset {sorted(v.index for v in places)} exceeds degree {d}")
    formula = int(binomial(d, len(places)))
    if d > BRUTE_FORCE_MAX_DEGREE:
        return formula

    indices = {v.index - 1 for v in places}
    group = SymmetricGroup(d)
    stabilizer = sum(1 for g in group.generate() if {g.array_form[i] for i in indices} == indices)
    brute = int(group.order()) // stabilizer
    if brute != formula:
        raise RuntimeError(f"stabilizer index {brute} disagrees with binomial({d}, {len(places)})")
    return brute


def reflex_degree_quaternionic(datum: QuaternionDatum) -> int:
    """
    Index in S_d of the stabilizer of ram_infinite, i.e. binomial(d, |ram_infinite|).

    Only meaningful when Aut(C) acts on the real places through all of S_d.
    """
    if realizability_note(datum.field) is not Realizability.FULL_SYMMETRIC:
        raise CertificateRequired("reflex degree needs an S_d-certified field")
    return stabilizer_index(datum.field.degree, datum.ram_infinite)


def conjugate_partitions(datum: QuaternionDatum) -> list[frozenset[RealPlace]]:
    """All labelled definite-place sets in the S_d-orbit of ram_infinite, ascending."""
    d = datum.field.degree
    k = len(datum.ram_infinite)
    return [
        frozenset(RealPlace(i) for i in combo) for combo in combinations(range(1, d + 1), k)
    ]


def minimal_noncompact_unitary(
    d: int, n_max: int = 8
) -> Optional[tuple[int, int, tuple[tuple[int, int], ...]]]:
    """
    Smallest dimension of a unitary datum over a degree-d field with every
    q_v > 0 that meets (i) and (ii).

    Returns (dimension, n, signatures) or None when no n <= n_max works.
    Ties go to the smaller n, then to the first signature multiset found.
    """
    if d < 1:
        raise PreconditionError(f"degree must be positive, got {d}")
    best = None
    for n in range(2, n_max + 1):
        choices = [(n - q, q) for q in range(1, n // 2 + 1)]
        for signatures in combinations_with_replacement(choices, d):
            if len(set(signatures)) < 2:
                continue
            if sum(q for _, q in signatures) < 2:
                continue
            dim = sum(p * q for p, q in signatures)
            if best is None or dim < best[0]:
                best = (dim, n, signatures)
    return best

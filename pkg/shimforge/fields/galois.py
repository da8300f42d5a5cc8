"""
Symmetric-group certification by Dedekind's theorem.

A prime p with squarefree reduction yields the cycle type of a Frobenius
element. A transitive subgroup of S_d containing a (d-1)-cycle and a
transposition is S_d, so three witnesses prove Gal(f) = S_d. Failing to
find them proves nothing.
"""
from __future__ import annotations

from typing import Optional

from sympy import primerange

from shimforge.arithmetic.finite_field import DegreePattern, degree_pattern_mod
from shimforge.arithmetic.polynomial import IntPolynomial
from shimforge.config.settings import DEFAULT_PRIME_BOUND
from shimforge.errors import NoWitnessFound, NotSquarefreeModP, PreconditionError
from shimforge.fields.field_types import GaloisCertificate
from shimforge.utils.logger import log


def is_transitive_shape(pattern: DegreePattern, d: int) -> bool:
    return pattern.parts == (d,)


def is_cycle_shape(pattern: DegreePattern, d: int) -> bool:
    return pattern.parts == (1, d - 1)


def is_transposition_shape(pattern: DegreePattern, d: int) -> bool:
    """
    {2, distinct odd degrees} or {2, 1, ..., 1}. Either way an odd power of
    the Frobenius element is a transposition.
    """
    if pattern.total != d or pattern.count(2) != 1:
        return False
    rest = [k for k in pattern.parts if k != 2]
    if all(k == 1 for k in rest):
        return True
    return all(k % 2 == 1 for k in rest) and len(set(rest)) == len(rest)


def certify_symmetric(f: IntPolynomial, prime_bound: Optional[int] = None) -> GaloisCertificate:
    """Scan primes <= prime_bound for the three S_d witnesses."""
    prime_bound = DEFAULT_PRIME_BOUND if prime_bound is None else prime_bound
    d = f.degree
    if d < 3:
        raise PreconditionError(f"symmetric certification needs degree >= 3, got {d}")
    if not f.is_monic:
        raise PreconditionError("certify_symmetric expects a monic polynomial")

    transitive: Optional[tuple[int, DegreePattern]] = None
    cycle: Optional[tuple[int, DegreePattern]] = None
    transposition: Optional[tuple[int, DegreePattern]] = None

    for p in primerange(2, prime_bound + 1):
        try:
            pattern = degree_pattern_mod(f, int(p))
        except NotSquarefreeModP:
            log.debug(f"p={p} divides the discriminant of {f}; skipped")
            continue
        if transitive is None and is_transitive_shape(pattern, d):
            transitive = (int(p), pattern)
        if cycle is None and is_cycle_shape(pattern, d):
            cycle = (int(p), pattern)
        if transposition is None and is_transposition_shape(pattern, d):
            transposition = (int(p), pattern)
        if transitive and cycle and transposition:
            break

    if not (transitive and cycle and transposition):
        missing = [
            name
            for name, found in (
                ("transitive", transitive),
                ("cycle", cycle),
                ("transposition", transposition),
            )
            if found is None
        ]
        raise NoWitnessFound(prime_bound, missing)

    certificate = GaloisCertificate(
        degree=d,
        p_transitive=transitive[0],
        pattern_transitive=transitive[1],
        p_cycle=cycle[0],
        pattern_cycle=cycle[1],
        p_transposition=transposition[0],
        pattern_transposition=transposition[1],
    )
    log.debug(
        f"S_{d} certified for {f}: p={certificate.p_transitive},"
        f"{certificate.p_cycle},{certificate.p_transposition}"
    )
    return certificate


def replay_galois_certificate(f: IntPolynomial, certificate: GaloisCertificate) -> bool:
    """Recompute every witness pattern and re-check its shape."""
    d = f.degree
    if certificate.degree != d:
        return False
    checks = (
        (certificate.p_transitive, certificate.pattern_transitive, is_transitive_shape),
        (certificate.p_cycle, certificate.pattern_cycle, is_cycle_shape),
        (certificate.p_transposition, certificate.pattern_transposition, is_transposition_shape),
    )
    for p, stored, shape in checks:
        try:
            pattern = degree_pattern_mod(f, p)
        except (NotSquarefreeModP, ValueError):
            return False
        if pattern != stored or not shape(pattern, d):
            return False
    return True

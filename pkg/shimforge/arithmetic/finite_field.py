"""
Reductions of integer polynomials modulo a prime.

Factorization shapes come from sympy's distinct-degree splitting
(gcd with X^(p^i) - X); polynomials over GF(p) use galoistools'
dense representation, highest degree first.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_ddf_zassenhaus,
    gf_degree,
    gf_factor_sqf,
    gf_from_int_poly,
    gf_irreducible_p,
    gf_monic,
    gf_mul,
    gf_sqf_p,
)

from shimforge.arithmetic.polynomial import IntPolynomial
from shimforge.errors import NotPrime, NotSquarefreeModP, PreconditionError


@dataclass(frozen=True)
class DegreePattern:
    """Multiset of irreducible-factor degrees of f mod p, stored ascending."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(int(k) for k in self.parts)))
        if any(k <= 0 for k in self.parts):
            raise ValueError(f"pattern parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def is_irreducible(self) -> bool:
        return len(self.parts) == 1

    @property
    def is_totally_split(self) -> bool:
        return all(k == 1 for k in self.parts)

    def count(self, degree: int) -> int:
        return self.parts.count(degree)

    @classmethod
    def parse(cls, text: str) -> DegreePattern:
        return cls(tuple(int(part) for part in text.split(",") if part.strip()))

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.parts)


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(p)


def reduce_mod(f: IntPolynomial, p: int) -> list:
    """Dense GF(p) representation of a monic f, highest degree first."""
    _require_prime(p)
    reduced = gf_from_int_poly(list(reversed(f.coefficients)), p)
    if gf_degree(reduced) != f.degree:
        raise PreconditionError(f"leading coefficient of {f} vanishes modulo {p}")
    return gf_monic(reduced, p, ZZ)[1]


def is_squarefree_mod(f: IntPolynomial, p: int) -> bool:
    return gf_sqf_p(reduce_mod(f, p), p, ZZ)


def degree_pattern_mod(f: IntPolynomial, p: int) -> DegreePattern:
    """Irreducible-factor degrees of f mod p; requires a squarefree reduction."""
    reduced = reduce_mod(f, p)
    if not gf_sqf_p(reduced, p, ZZ):
        raise NotSquarefreeModP(p)
    parts: list[int] = []
    for block, degree in gf_ddf_zassenhaus(reduced, p, ZZ):
        parts.extend([degree] * (gf_degree(block) // degree))
    return DegreePattern(tuple(parts))


def roots_mod(f: IntPolynomial, p: int) -> tuple[int, ...]:
    """Distinct roots of a squarefree reduction f mod p, ascending."""
    reduced = reduce_mod(f, p)
    if not gf_sqf_p(reduced, p, ZZ):
        raise NotSquarefreeModP(p)
    if gf_degree(reduced) < 1:
        return ()
    _, factors = gf_factor_sqf(reduced, p, ZZ)
    return tuple(sorted((-factor[1]) % p for factor in factors if gf_degree(factor) == 1))


def _monic_polynomials(degree: int, p: int) -> Iterator[list]:
    for lower in product(range(p), repeat=degree):
        yield [1, *lower]


def nth_irreducible(degree: int, p: int, index: int) -> list:
    """
    The index-th monic irreducible of the given degree over GF(p), in
    lexicographic order of the lower coefficients (wrapping around).
    """
    _require_prime(p)
    if degree < 1:
        raise PreconditionError("irreducible polynomials have degree >= 1")
    found = []
    for candidate in _monic_polynomials(degree, p):
        if gf_irreducible_p(candidate, p, ZZ):
            if len(found) == index:
                return candidate
            found.append(candidate)
    return found[index % len(found)]


def distinct_irreducibles(degree: int, count: int, p: int, offset: int) -> list[list]:
    """`count` distinct monic irreducibles of a degree, starting at `offset`."""
    chosen = [nth_irreducible(degree, p, offset + j) for j in range(count)]
    # Consecutive indices wrap modulo the number of irreducibles
    if len({tuple(poly) for poly in chosen}) < count:
        raise PreconditionError(f"GF({p}) has fewer than {count} irreducibles of degree {degree}")
    return chosen


def product_mod(factors: Sequence[list], p: int) -> IntPolynomial:
    """Multiply GF(p) factors and lift to an integer polynomial in [0, p)."""
    result = [ZZ.one]
    for factor in factors:
        result = gf_mul(result, factor, p, ZZ)
    return IntPolynomial(tuple(int(c) % p for c in reversed(result)))


def polynomial_with_pattern(pattern: DegreePattern, p: int, offset: int = 0) -> IntPolynomial:
    """Monic squarefree polynomial mod p whose factor degrees are `pattern`."""
    factors: list[list] = []
    for degree, multiplicity in sorted(Counter(pattern.parts).items()):
        factors.extend(distinct_irreducibles(degree, multiplicity, p, offset))
    return product_mod(factors, p)

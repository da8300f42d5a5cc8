"""
Integer polynomials and exact real-root work.

Sturm chains are built over the rationals with sympy's Poly, and every
sign evaluation happens at exact rational points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ

from shimforge.config.settings import ISOLATION_WIDTH
from shimforge.errors import NotSquarefree, PreconditionError

X = Symbol("X")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients stored lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            raise PreconditionError("the zero polynomial is not supported")
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        """Monic polynomial prod (X - r)."""
        poly = Poly(1, X, domain=QQ)
        for root in roots:
            poly = poly * Poly(X - root, X, domain=QQ)
        return cls.from_poly(poly)

    @classmethod
    def from_poly(cls, poly: Poly) -> IntPolynomial:
        coeffs = poly.all_coeffs()
        if any(Rational(c).q != 1 for c in coeffs):
            raise PreconditionError(f"polynomial has non-integral coefficients: {poly}")
        return cls(tuple(int(c) for c in reversed(coeffs)))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Parse "c0,c1,...,cd" (lowest degree first)."""
        parts = [part.strip() for part in text.split(",") if part.strip()]
        if not parts:
            raise ValueError(f"empty coefficient list: {text!r}")
        return cls(tuple(int(part) for part in parts))

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)), X, domain=QQ)

    def evaluate(self, x: Fraction | int) -> Fraction:
        value = self.to_poly().eval(_rational(x))
        return Fraction(int(value.p), int(value.q))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class RootIsolation:
    """Sorted, pairwise disjoint intervals (lo, hi], one real root each."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def count(self) -> int:
        return len(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def _rational(x: Fraction | int) -> Rational:
    x = Fraction(x)
    return Rational(x.numerator, x.denominator)


def _sign(value) -> int:
    return bool(value > 0) - bool(value < 0)


def squarefree_part(f: IntPolynomial) -> Poly:
    """f / gcd(f, f') over the rationals."""
    poly = f.to_poly()
    if poly.degree() < 1:
        return poly
    return poly.quo(poly.gcd(poly.diff(X)))


def is_squarefree(f: IntPolynomial) -> bool:
    poly = f.to_poly()
    if poly.degree() < 1:
        return True
    return poly.gcd(poly.diff(X)).degree() == 0


def sturm_chain(poly: Poly) -> list[Poly]:
    """Signed remainder sequence p0 = poly, p1 = poly', p(i+1) = -rem(p(i-1), p(i))."""
    chain = [poly]
    derivative = poly.diff(X)
    if derivative.is_zero:
        return chain
    chain.append(derivative)
    while True:
        remainder = chain[-2].rem(chain[-1])
        if remainder.is_zero:
            return chain
        chain.append(-remainder)


def _variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _variations_at(chain: Sequence[Poly], x: Fraction) -> int:
    point = _rational(x)
    return _variations([_sign(p.eval(point)) for p in chain])


def _variations_at_infinity(chain: Sequence[Poly], positive: bool) -> int:
    signs = []
    for p in chain:
        sign = _sign(p.LC())
        if not positive and p.degree() % 2 == 1:
            sign = -sign
        signs.append(sign)
    return _variations(signs)


def sturm_real_root_count(f: IntPolynomial) -> int:
    """Number of distinct real roots of f on the whole real line."""
    chain = sturm_chain(squarefree_part(f))
    return _variations_at_infinity(chain, positive=False) - _variations_at_infinity(
        chain, positive=True
    )


def count_roots_in(chain: Sequence[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in the half-open interval (lo, hi] for a squarefree chain."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def cauchy_bound(f: IntPolynomial) -> Fraction:
    """1 + max |c_i / c_d|; every complex root lies strictly inside."""
    lead = abs(Fraction(f.leading))
    return 1 + max((abs(Fraction(c)) / lead for c in f.coefficients[:-1]), default=Fraction(0))


def _split_point(poly: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """Midpoint of (lo, hi], nudged off exact roots so endpoints stay root-free."""
    width = hi - lo
    for numerator, denominator in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)):
        point = lo + width * Fraction(numerator, denominator)
        if poly.eval(_rational(point)) != 0:
            return point
    # Finitely many roots, so some dyadic point is free
    denominator = 8
    while True:
        for numerator in range(1, denominator, 2):
            point = lo + width * Fraction(numerator, denominator)
            if poly.eval(_rational(point)) != 0:
                return point
        denominator *= 2


def isolate_real_roots(f: IntPolynomial, width: Fraction = ISOLATION_WIDTH) -> RootIsolation:
    """
    Isolate the real roots of a squarefree f by Sturm-guided bisection.

    Intervals are ascending, narrower than `width`, have non-root endpoints
    with opposite signs of f, and are pairwise disjoint as closed intervals.
    """
    if not is_squarefree(f):
        raise NotSquarefree(f"gcd(f, f') is nonconstant for f = {f}")
    poly = f.to_poly()
    if poly.degree() < 1:
        return RootIsolation(())
    chain = sturm_chain(poly)
    bound = cauchy_bound(f)

    pending = [(-bound, bound)]
    isolated: list[tuple[Fraction, Fraction]] = []
    while pending:
        lo, hi = pending.pop()
        count = count_roots_in(chain, lo, hi)
        if count == 0:
            continue
        if count == 1 and hi - lo < width:
            isolated.append((lo, hi))
            continue
        mid = _split_point(poly, lo, hi)
        pending.append((lo, mid))
        pending.append((mid, hi))

    isolated.sort()
    # Neighbours produced by the same split share an endpoint; pull each
    # interval off its right neighbour.
    for i in range(len(isolated) - 1):
        lo, hi = isolated[i]
        while hi == isolated[i + 1][0]:
            mid = _split_point(poly, lo, hi)
            if count_roots_in(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        isolated[i] = (lo, hi)
    return RootIsolation(tuple(isolated))


def refine_interval(
    f: IntPolynomial, interval: tuple[Fraction, Fraction], width: Fraction
) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of f until it is narrower than width."""
    poly = squarefree_part(f)
    chain = sturm_chain(poly)
    lo, hi = interval
    if count_roots_in(chain, lo, hi) != 1:
        raise PreconditionError(f"({lo}, {hi}] does not isolate exactly one root")
    while hi - lo >= width:
        mid = _split_point(poly, lo, hi)
        if count_roots_in(chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def interval_isolates_root(f: IntPolynomial, interval: tuple[Fraction, Fraction]) -> bool:
    """Replay check for one stored interval: lo < hi, one root, sign change."""
    lo, hi = interval
    if not lo < hi:
        return False
    chain = sturm_chain(squarefree_part(f))
    if count_roots_in(chain, lo, hi) != 1:
        return False
    f_lo, f_hi = f.evaluate(lo), f.evaluate(hi)
    return f_lo == 0 or f_hi == 0 or _sign(f_lo) != _sign(f_hi)

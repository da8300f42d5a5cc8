"""
Tests for exact polynomial arithmetic: Sturm counting, isolation,
reductions modulo primes and CRT recombination.
"""
import random
from fractions import Fraction

import pytest
from sympy import Poly, Symbol

from shimforge.arithmetic.crt import closest_representative, crt_lift
from shimforge.arithmetic.finite_field import (
    DegreePattern,
    degree_pattern_mod,
    is_squarefree_mod,
    nth_irreducible,
    polynomial_with_pattern,
    roots_mod,
)
from shimforge.arithmetic.polynomial import (
    IntPolynomial,
    count_roots_in,
    interval_isolates_root,
    is_squarefree,
    isolate_real_roots,
    refine_interval,
    squarefree_part,
    sturm_chain,
    sturm_real_root_count,
)
from shimforge.errors import (
    DegreeMismatch,
    NotPrime,
    NotSquarefree,
    NotSquarefreeModP,
    PreconditionError,
)

Z = Symbol("Z")


def poly(*coefficients):
    return IntPolynomial(tuple(coefficients))


def test_trailing_zeros_stripped():
    f = poly(1, 2, 0, 0)
    assert f.coefficients == (1, 2)
    assert f.degree == 1


def test_zero_polynomial_rejected():
    with pytest.raises(PreconditionError):
        poly(0, 0)


def test_parse_and_str():
    f = IntPolynomial.parse("-1,-4,0,1")
    assert f == poly(-1, -4, 0, 1)
    assert str(f) == "-1,-4,0,1"
    assert f.is_monic


def test_from_roots():
    assert IntPolynomial.from_roots([1, 2]) == poly(2, -3, 1)


def test_evaluate_exact():
    assert poly(-1, -4, 0, 1).evaluate(Fraction(1, 2)) == Fraction(-23, 8)


@pytest.mark.parametrize(
    "coefficients,expected",
    [
        ((-1, -3, 0, 1), 3),
        ((1, 0, 1), 0),
        ((-2, 0, 1), 2),
        ((0, 1), 1),
        ((5,), 0),
    ],
)
def test_sturm_known_counts(coefficients, expected):
    assert sturm_real_root_count(IntPolynomial(coefficients)) == expected


def test_repeated_roots_counted_once():
    # (X - 1)^2 (X + 1)
    assert sturm_real_root_count(poly(1, -1, -1, 1)) == 2
    assert not is_squarefree(poly(1, -1, -1, 1))


def test_sturm_matches_sympy_intervals():
    rng = random.Random(1234)
    for _ in range(200):
        degree = rng.randint(1, 7)
        coefficients = [rng.randint(-20, 20) for _ in range(degree)] + [rng.choice([-3, -1, 1, 2])]
        f = IntPolynomial(tuple(coefficients))
        oracle = Poly(list(reversed(f.coefficients)), Z)
        assert sturm_real_root_count(f) == len(oracle.intervals())


def test_sturm_signs_at_rational_points():
    # chain values come back as sympy numbers, not Python ints
    chain = sturm_chain(squarefree_part(poly(-2, 0, 1)))
    assert count_roots_in(chain, Fraction(-2), Fraction(0)) == 1
    assert count_roots_in(chain, Fraction(-2), Fraction(2)) == 2
    assert count_roots_in(chain, Fraction(3, 2), Fraction(2)) == 0


def test_isolation_count_matches_sturm_on_random_squarefree():
    rng = random.Random(2718)
    checked = 0
    while checked < 300:
        degree = rng.randint(1, 8)
        f = IntPolynomial(tuple(rng.randint(-50, 50) for _ in range(degree)) + (1,))
        if not is_squarefree(f):
            continue
        checked += 1
        isolation = isolate_real_roots(f)
        assert isolation.count == sturm_real_root_count(f)
        for interval in isolation:
            assert interval_isolates_root(f, interval)


def test_isolate_real_roots_cubic():
    f = poly(-1, -3, 0, 1)
    isolation = isolate_real_roots(f)
    assert isolation.count == 3
    intervals = list(isolation)
    assert intervals == sorted(intervals)
    for lo, hi in intervals:
        assert hi - lo < Fraction(1, 64)
        assert interval_isolates_root(f, (lo, hi))
        assert f.evaluate(lo) != 0 and f.evaluate(hi) != 0
    for left, right in zip(intervals, intervals[1:]):
        assert left[1] < right[0]


def test_isolate_real_roots_separates_close_roots():
    # roots 0, 1/100 scaled: X (100 X - 1) has non-monic leading coefficient
    f = poly(0, -1, 100)
    isolation = isolate_real_roots(f)
    assert isolation.count == 2
    (a_lo, a_hi), (b_lo, b_hi) = isolation.intervals
    assert a_lo < 0 <= a_hi < b_lo < Fraction(1, 100) <= b_hi


def test_isolate_real_roots_rejects_non_squarefree():
    with pytest.raises(NotSquarefree):
        isolate_real_roots(poly(1, -2, 1))


def test_isolate_real_roots_without_real_roots():
    assert isolate_real_roots(poly(1, 0, 1)).count == 0


def test_refine_interval():
    f = poly(-2, 0, 1)
    lo, hi = isolate_real_roots(f).intervals[1]
    narrow = refine_interval(f, (lo, hi), Fraction(1, 10**6))
    assert narrow[1] - narrow[0] < Fraction(1, 10**6)
    assert narrow[0] ** 2 < 2 <= narrow[1] ** 2


def test_refine_rejects_non_isolating():
    with pytest.raises(PreconditionError):
        refine_interval(poly(-2, 0, 1), (Fraction(-5), Fraction(5)), Fraction(1, 10))


def test_degree_pattern_order_and_text():
    pattern = DegreePattern((2, 1))
    assert pattern.parts == (1, 2)
    assert str(pattern) == "1,2"
    assert DegreePattern.parse("2,1") == pattern
    assert pattern.total == 3


def test_s3_cubic_patterns(s3_cubic):
    assert degree_pattern_mod(s3_cubic, 2) == DegreePattern((1, 2))
    assert degree_pattern_mod(s3_cubic, 3) == DegreePattern((3,))
    assert degree_pattern_mod(s3_cubic, 3).is_irreducible


def test_cyclic_cubic_ramified_at_3(cyclic_cubic):
    assert not is_squarefree_mod(cyclic_cubic, 3)
    with pytest.raises(NotSquarefreeModP) as excinfo:
        degree_pattern_mod(cyclic_cubic, 3)
    assert excinfo.value.p == 3


def test_degree_pattern_rejects_composite_modulus(s3_cubic):
    with pytest.raises(NotPrime):
        degree_pattern_mod(s3_cubic, 4)


def test_roots_mod():
    assert roots_mod(poly(-5, 0, 1), 11) == (4, 7)
    assert roots_mod(poly(0, 1), 2) == (0,)


def test_nth_irreducible():
    assert nth_irreducible(2, 2, 0) == [1, 1, 1]
    # wraps around the single quadratic
    assert nth_irreducible(2, 2, 5) == [1, 1, 1]
    assert nth_irreducible(1, 3, 2) == [1, 2]


@pytest.mark.parametrize(
    "parts,p",
    [((3,), 2), ((1, 2), 3), ((2, 1, 1), 5), ((2, 1, 3), 5), ((1, 4), 3), ((6,), 2)],
)
def test_polynomial_with_pattern(parts, p):
    pattern = DegreePattern(parts)
    for offset in range(3):
        target = polynomial_with_pattern(pattern, p, offset)
        assert target.is_monic
        assert all(0 <= c < p for c in target.coefficients)
        assert degree_pattern_mod(target, p) == pattern


def test_polynomial_with_pattern_too_few_irreducibles():
    with pytest.raises(PreconditionError):
        polynomial_with_pattern(DegreePattern((2, 2)), 2)


def test_crt_lift_closest_representative():
    assert closest_representative(1, 2, 0) == 1
    assert closest_representative(3, 10, 41) == 43
    assert closest_representative(7, 10, 41) == 37


def test_crt_lift_single_target():
    assert crt_lift([(2, poly(1, 1))], poly(0, 1)) == poly(1, 1)


def test_crt_lift_empty_targets_return_template():
    template = poly(6, -5, 1)
    assert crt_lift([], template) == template


def test_crt_lift_congruences_and_closeness():
    template = IntPolynomial.from_roots([8, 16, 24])
    targets = [
        (2, polynomial_with_pattern(DegreePattern((3,)), 2)),
        (3, polynomial_with_pattern(DegreePattern((1, 2)), 3)),
        (5, polynomial_with_pattern(DegreePattern((1, 2)), 5)),
    ]
    g = crt_lift(targets, template)
    assert g.is_monic and g.degree == 3
    for p, target in targets:
        assert all((a - b) % p == 0 for a, b in zip(g.coefficients, target.coefficients))
    for a, b in zip(g.coefficients, template.coefficients):
        assert abs(a - b) <= 15


def test_crt_lift_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        crt_lift([(2, poly(1, 1))], poly(0, 0, 1))


def test_crt_lift_duplicate_primes():
    with pytest.raises(PreconditionError):
        crt_lift([(2, poly(1, 1)), (2, poly(0, 1))], poly(0, 1))

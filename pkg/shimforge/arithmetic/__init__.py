"""
Arithmetic Module

Exact work on monic integer polynomials: Sturm counting and isolation,
factorization shapes modulo primes, CRT recombination.
"""
from shimforge.arithmetic.polynomial import (
    IntPolynomial,
    RootIsolation,
    sturm_real_root_count,
    isolate_real_roots,
    refine_interval,
    interval_isolates_root,
    is_squarefree,
)
from shimforge.arithmetic.finite_field import (
    DegreePattern,
    degree_pattern_mod,
    roots_mod,
    is_squarefree_mod,
    nth_irreducible,
    polynomial_with_pattern,
)
from shimforge.arithmetic.crt import crt_lift

__all__ = [
    "IntPolynomial",
    "RootIsolation",
    "sturm_real_root_count",
    "isolate_real_roots",
    "refine_interval",
    "interval_isolates_root",
    "is_squarefree",
    "DegreePattern",
    "degree_pattern_mod",
    "roots_mod",
    "is_squarefree_mod",
    "nth_irreducible",
    "polynomial_with_pattern",
    "crt_lift",
]

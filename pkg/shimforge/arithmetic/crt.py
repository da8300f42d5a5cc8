"""
Coefficientwise CRT recombination of monic polynomials.
"""
from __future__ import annotations

from typing import Sequence

from sympy.ntheory.modular import crt

from shimforge.arithmetic.polynomial import IntPolynomial
from shimforge.errors import DegreeMismatch, PreconditionError


def closest_representative(residue: int, modulus: int, target: int) -> int:
    """Element of residue + modulus*Z nearest to target; ties go to the larger value."""
    below = target - (target - residue) % modulus
    above = below + modulus
    return below if target - below < above - target else above


def crt_lift(targets: Sequence[tuple[int, IntPolynomial]], template: IntPolynomial) -> IntPolynomial:
    """
    Monic g of the template's degree with g = target_i (mod p_i) coefficientwise,
    each lower coefficient taken in its residue class as close as possible to
    the template's coefficient.
    """
    if not targets:
        return template
    primes = [p for p, _ in targets]
    if len(set(primes)) != len(primes):
        raise PreconditionError(f"CRT primes must be distinct: {primes}")
    degree = template.degree
    for p, target in targets:
        if target.degree != degree:
            raise DegreeMismatch(
                f"target mod {p} has degree {target.degree}, template has degree {degree}"
            )
        if not target.is_monic:
            raise PreconditionError(f"target mod {p} is not monic")

    coefficients = []
    for k in range(degree):
        residues = [target.coefficients[k] % p for p, target in targets]
        residue, modulus = crt(primes, residues)
        coefficients.append(
            closest_representative(int(residue), int(modulus), template.coefficients[k])
        )
    coefficients.append(1)
    return IntPolynomial(tuple(coefficients))

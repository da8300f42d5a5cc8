"""
Error types raised across shimforge.

Each error also derives from the closest builtin so callers may catch
ValueError / LookupError / RuntimeError generically.
"""
from __future__ import annotations

from typing import Sequence


class ShimforgeError(Exception):
    """Base class for all shimforge errors."""


class PreconditionError(ShimforgeError, ValueError):
    """An operation was called outside its documented domain."""


class NotSquarefree(ShimforgeError, ValueError):
    """gcd(f, f') is nonconstant over the rationals."""


class NotSquarefreeModP(ShimforgeError, ValueError):
    """f mod p has a repeated factor; Dedekind's theorem does not apply at p."""

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"reduction is not squarefree modulo {p}")


class NotPrime(ShimforgeError, ValueError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class DegreeMismatch(ShimforgeError, ValueError):
    pass


class NotTotallyReal(ShimforgeError, ValueError):
    pass


class SearchExhausted(ShimforgeError, RuntimeError):
    """A bounded search ran out of iterations."""

    def __init__(self, budget: int, what: str = "search"):
        self.budget = budget
        super().__init__(f"{what} exhausted its budget of {budget} iterations")


class NoWitnessFound(ShimforgeError, LookupError):
    """Inconclusive Galois scan. This is not a proof that the group is smaller."""

    def __init__(self, prime_bound: int, missing: Sequence[str] = ()):
        self.prime_bound = prime_bound
        self.missing = tuple(missing)
        detail = f" (missing: {', '.join(self.missing)})" if self.missing else ""
        super().__init__(f"no complete witness set among primes <= {prime_bound}{detail}")


class NotNormalizing(ShimforgeError, ValueError):
    pass


class PrincipalHomogeneityViolated(ShimforgeError, ValueError):
    pass


class CertificateRequired(ShimforgeError, ValueError):
    pass


class ConstraintViolation(ShimforgeError, ValueError):
    """A value record violates a named structural constraint."""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        message = f"{constraint}: {detail}" if detail else constraint
        super().__init__(message)


class InvalidDatum(ShimforgeError, ValueError):
    """A datum fails the construction conditions."""

    def __init__(self, violations: Sequence[object]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class MissingSplitWitness(ShimforgeError, LookupError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"field carries no split-prime witness for p={p}")


class DocumentError(ShimforgeError, ValueError):
    """A document is malformed, truncated or refers to missing data."""

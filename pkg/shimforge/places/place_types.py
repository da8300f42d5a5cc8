"""
Place Type Definitions

Real places are indexed by the ascending order of the definer's isolating
intervals; p-adic places over a split prime by ascending residue order.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from shimforge.errors import ConstraintViolation


class Realizability(Enum):
    """Which permutations of real places are known to come from some tau in Aut(C)."""
    FULL_SYMMETRIC = "FullSymmetric"
    TRANSITIVITY_ONLY = "TransitivityOnly"


@dataclass(frozen=True, order=True)
class RealPlace:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ConstraintViolation("real place index", f"{self.index} < 1")

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True, order=True)
class FinitePlace:
    """The slot-th p-adic place over a completely split prime p."""
    p: int
    slot: int

    def __post_init__(self):
        if self.slot < 1:
            raise ConstraintViolation("finite place slot", f"{self.slot} < 1")

    @classmethod
    def parse(cls, text: str) -> FinitePlace:
        """Parse "p11:1"."""
        body = text.strip()
        if not body.startswith("p") or ":" not in body:
            raise ValueError(f"finite place must look like p<prime>:<slot>, got {text!r}")
        prime, slot = body[1:].split(":", 1)
        return cls(int(prime), int(slot))

    def __str__(self) -> str:
        return f"p{self.p}:{self.slot}"


def real_places(indices) -> frozenset[RealPlace]:
    """frozenset of RealPlace from an iterable of indices or places."""
    return frozenset(v if isinstance(v, RealPlace) else RealPlace(int(v)) for v in indices)

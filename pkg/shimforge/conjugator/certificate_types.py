"""
Certificate Type Definitions
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from shimforge.errors import ConstraintViolation
from shimforge.forms.form_types import ShimuraDatumDescriptor
from shimforge.places.permutations import PlacePermutation
from shimforge.places.place_types import FinitePlace, Realizability

# Refusal clause names
RANK = "rank"
PARTITION_MOVED = "partition_moved"
AUT_CONTROL = "aut_control"
REALIZABILITY = "realizability"


class AutControlKind(Enum):
    CERTIFIED_TRIVIAL_AUT = "CertifiedTrivialAut"
    FINITE_MARKING = "FiniteMarking"


@dataclass(frozen=True)
class AutControl:
    """How field automorphisms are ruled out."""
    kind: AutControlKind
    place: Optional[FinitePlace] = None

    def __post_init__(self):
        if (self.kind is AutControlKind.FINITE_MARKING) != (self.place is not None):
            raise ConstraintViolation("aut control", "FiniteMarking carries exactly one place")

    @classmethod
    def parse(cls, text: str) -> AutControl:
        if text == AutControlKind.CERTIFIED_TRIVIAL_AUT.value:
            return cls(AutControlKind.CERTIFIED_TRIVIAL_AUT)
        prefix = AutControlKind.FINITE_MARKING.value + "("
        if text.startswith(prefix) and text.endswith(")"):
            return cls(AutControlKind.FINITE_MARKING, FinitePlace.parse(text[len(prefix):-1]))
        raise ValueError(f"unknown aut control {text!r}")

    def __str__(self) -> str:
        if self.place is None:
            return self.kind.value
        return f"{self.kind.value}({self.place})"


@dataclass(frozen=True)
class MarkingRecord:
    """
    A p-adic place whose local type differs from every other place over p.

    A field automorphism preserving the finite local data must then fix the
    marked place, hence is trivial.
    """
    p: int
    marked_place: FinitePlace

    def __post_init__(self):
        if self.marked_place.p != self.p:
            raise ConstraintViolation("marking prime", f"{self.marked_place} does not lie over {self.p}")

    @property
    def uniqueness(self) -> str:
        return f"local type at {self.marked_place} differs from every other place over {self.p}"


@dataclass(frozen=True)
class CertificateChecks:
    rank_ok: bool
    rank_value: int
    partition_moved: bool
    aut_control: Optional[AutControl]
    realizability: Realizability
    tau_asserted: bool = False


@dataclass(frozen=True)
class Verdict:
    """Granted, or Refused with the failing clause names."""
    reasons: tuple[str, ...] = ()

    @property
    def granted(self) -> bool:
        return not self.reasons

    @classmethod
    def parse(cls, text: str) -> Verdict:
        if text == "Granted":
            return cls()
        if text.startswith("Refused(") and text.endswith(")"):
            return cls(tuple(reason for reason in text[len("Refused("):-1].split(",") if reason))
        raise ValueError(f"unknown verdict {text!r}")

    def __str__(self) -> str:
        return "Granted" if self.granted else f"Refused({','.join(self.reasons)})"


@dataclass(frozen=True)
class RigidityCertificate:
    datum: ShimuraDatumDescriptor
    permutation: PlacePermutation
    conjugate: ShimuraDatumDescriptor
    checks: CertificateChecks
    verdict: Verdict
    marking: Optional[MarkingRecord] = None

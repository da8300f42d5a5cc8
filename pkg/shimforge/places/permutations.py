"""
Permutations of real places induced by automorphisms of C.

pi(v) denotes the place tau o v. Finite places are never moved, so the
permutation carries no finite-place action at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from sympy.combinatorics import Permutation

from shimforge.errors import ConstraintViolation, DegreeMismatch
from shimforge.fields.field_types import TotallyRealField
from shimforge.places.place_types import RealPlace, Realizability, real_places


@dataclass(frozen=True)
class PlacePermutation:
    """A bijection of 1..d in one-line notation."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ConstraintViolation("place permutation", f"{list(images)} is not a bijection of 1..d")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> PlacePermutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> PlacePermutation:
        images = list(range(1, d + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> PlacePermutation:
        """Parse one-line notation "2,1,3"."""
        return cls(tuple(int(part) for part in text.split(",") if part.strip()))

    @classmethod
    def from_sympy(cls, perm: Permutation) -> PlacePermutation:
        return cls(tuple(i + 1 for i in perm.array_form))

    def to_sympy(self) -> Permutation:
        return Permutation([i - 1 for i in self.images])

    def __call__(self, v: RealPlace) -> RealPlace:
        return RealPlace(self.images[v.index - 1])

    def inverse(self) -> PlacePermutation:
        return PlacePermutation.from_sympy(~self.to_sympy())

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def image(self, places: Iterable[RealPlace]) -> frozenset[RealPlace]:
        """pi(S)"""
        return frozenset(self(v) for v in places)

    def pullback(self, places: Iterable[RealPlace]) -> frozenset[RealPlace]:
        """pi^-1(S) = {v : pi(v) in S}"""
        return self.inverse().image(places)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.images)


def compose(first: PlacePermutation, second: PlacePermutation) -> PlacePermutation:
    """(first o second)(v) = first(second(v))."""
    if first.degree != second.degree:
        raise DegreeMismatch(f"cannot compose degree {first.degree} with degree {second.degree}")
    # sympy multiplies left to right: (a*b)(i) = b(a(i))
    return PlacePermutation.from_sympy(second.to_sympy() * first.to_sympy())


def preserves_subset(pi: PlacePermutation, subset: Iterable) -> bool:
    """True iff pi^-1(S) = S, equivalently pi(S) = S."""
    places = real_places(subset)
    if any(v.index > pi.degree for v in places):
        raise ConstraintViolation("real place index", f"subset exceeds degree {pi.degree}")
    return pi.pullback(places) == places


def realizability_note(field: TotallyRealField) -> Realizability:
    """
    FullSymmetric when every permutation of real places is induced by some tau:
    the field is S_d-certified, or has at most two real places (transitivity
    already realizes the swap). Otherwise only transitivity is known.
    """
    if field.is_certified or field.degree <= 2:
        return Realizability.FULL_SYMMETRIC
    return Realizability.TRANSITIVITY_ONLY

"""
Places Module

Real and marked p-adic places, and permutations of real places.
"""
from shimforge.places.place_types import FinitePlace, RealPlace, Realizability, real_places
from shimforge.places.permutations import (
    PlacePermutation,
    compose,
    preserves_subset,
    realizability_note,
)

__all__ = [
    "FinitePlace",
    "RealPlace",
    "Realizability",
    "real_places",
    "PlacePermutation",
    "compose",
    "preserves_subset",
    "realizability_note",
]

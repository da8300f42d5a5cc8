"""
Field Type Definitions

Dataclasses for forged totally real fields and the witnesses they carry.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from shimforge.arithmetic.finite_field import DegreePattern
from shimforge.arithmetic.polynomial import IntPolynomial, RootIsolation
from shimforge.errors import ConstraintViolation, MissingSplitWitness

SYMMETRIC_CONCLUSION = "symmetric-group, Aut(F)=1"


@dataclass(frozen=True)
class GaloisCertificate:
    """Dedekind witnesses proving Gal = S_d, hence Aut(F) = 1."""
    degree: int
    p_transitive: int
    pattern_transitive: DegreePattern
    p_cycle: int
    pattern_cycle: DegreePattern
    p_transposition: int
    pattern_transposition: DegreePattern
    conclusion: str = SYMMETRIC_CONCLUSION

    def __post_init__(self):
        if self.degree < 3:
            raise ConstraintViolation("certificate degree", "S_d certificates need d >= 3")

    def witnesses(self) -> list[tuple[str, int, DegreePattern]]:
        return [
            ("transitive", self.p_transitive, self.pattern_transitive),
            ("cycle", self.p_cycle, self.pattern_cycle),
            ("transposition", self.p_transposition, self.pattern_transposition),
        ]


@dataclass(frozen=True)
class SplitPrimeWitness:
    """A completely split prime with the roots that index its p-adic places."""
    p: int
    residues: tuple[int, ...]

    def __post_init__(self):
        residues = tuple(int(r) for r in self.residues)
        if list(residues) != sorted(set(residues)):
            raise ConstraintViolation("split witness residues", "must be distinct and ascending")
        object.__setattr__(self, "residues", residues)


@dataclass(frozen=True)
class TotallyRealField:
    """Totally real field presented by its definer and ordered real embeddings."""
    degree: int
    definer: IntPolynomial
    embeddings: RootIsolation
    aut_certificate: Optional[GaloisCertificate] = None
    split_witnesses: tuple[SplitPrimeWitness, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.definer.degree != self.degree:
            raise ConstraintViolation("field degree", "definer degree differs from field degree")
        if not self.definer.is_monic:
            raise ConstraintViolation("monic definer")
        if self.embeddings.count != self.degree:
            raise ConstraintViolation(
                "totally real", f"{self.embeddings.count} isolating intervals for degree {self.degree}"
            )
        witnesses = tuple(sorted(self.split_witnesses, key=lambda w: w.p))
        if len({w.p for w in witnesses}) != len(witnesses):
            raise ConstraintViolation("split witnesses", "one witness per prime")
        object.__setattr__(self, "split_witnesses", witnesses)

    @property
    def real_places(self) -> range:
        """Real place indices, 1-based, in ascending order of embeddings."""
        return range(1, self.degree + 1)

    @property
    def is_certified(self) -> bool:
        return self.aut_certificate is not None

    def split_witness(self, p: int) -> SplitPrimeWitness:
        for witness in self.split_witnesses:
            if witness.p == p:
                return witness
        raise MissingSplitWitness(p)

    def has_split_witness(self, p: int) -> bool:
        return any(w.p == p for w in self.split_witnesses)

    def with_split_witness(self, witness: SplitPrimeWitness) -> TotallyRealField:
        if self.has_split_witness(witness.p):
            return self
        return replace(self, split_witnesses=self.split_witnesses + (witness,))

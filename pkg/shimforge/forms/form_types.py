"""
Form Type Definitions

Local-invariant records for the three families of Shimura data: inner forms
of SL_2 from quaternion algebras, unitary groups of hermitian forms, and
type D groups from skew-hermitian forms over a quaternion algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from shimforge.errors import ConstraintViolation, MissingSplitWitness
from shimforge.fields.field_types import TotallyRealField
from shimforge.places.place_types import FinitePlace, RealPlace, real_places

BOREL_HARDER_NOTE = (
    "Borel-Harder: an absolutely simple, simply connected F-group with the "
    "prescribed local forms exists"
)
CM_EXISTENCE_NOTE = "E = F.K for a suitable imaginary quadratic field K"


class DatumKind(Enum):
    QUATERNIONIC = "quaternionic"
    UNITARY = "unitary"
    TYPE_D = "type-d"


class LocalTag(Enum):
    """Opaque local isomorphism class at a marked p-adic place."""
    TYPE_A = "type-A"
    TYPE_B = "type-B"


class Compactness(Enum):
    COMPACT = "Compact"
    NONCOMPACT_WITNESSED = "NoncompactWitnessed"
    UNDETERMINED = "Undetermined"


def _check_real_places(places: frozenset[RealPlace], d: int, what: str) -> None:
    for v in places:
        if v.index > d:
            raise ConstraintViolation("real place index", f"{what} names {v} but d = {d}")


def _check_finite_places(places, field: TotallyRealField, what: str) -> None:
    for place in places:
        if not field.has_split_witness(place.p):
            raise MissingSplitWitness(place.p)
        if place.slot > field.degree:
            raise ConstraintViolation("finite place slot", f"{what} names {place} but d = {field.degree}")


def _normalize_marks(marks) -> tuple[tuple[FinitePlace, LocalTag], ...]:
    return tuple(sorted((place, LocalTag(tag)) for place, tag in dict(marks).items()))


@dataclass(frozen=True)
class QuaternionDatum:
    """
    Quaternion algebra B over F by its ramification.

    ram_infinite holds the definite real places (invariant 1/2); ram_finite
    the ramified p-adic places over split primes.
    """
    field: TotallyRealField
    ram_infinite: frozenset[RealPlace]
    ram_finite: frozenset[FinitePlace] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "ram_infinite", real_places(self.ram_infinite))
        object.__setattr__(self, "ram_finite", frozenset(self.ram_finite))
        _check_real_places(self.ram_infinite, self.field.degree, "ram_infinite")
        _check_finite_places(self.ram_finite, self.field, "ram_finite")
        if (len(self.ram_infinite) + len(self.ram_finite)) % 2:
            raise ConstraintViolation(
                "reciprocity parity",
                f"|ram_infinite| + |ram_finite| = {len(self.ram_infinite) + len(self.ram_finite)} is odd",
            )
        if len(self.ram_infinite) == self.field.degree:
            raise ConstraintViolation("indefinite place", "B is definite at every real place")

    @property
    def kind(self) -> DatumKind:
        return DatumKind.QUATERNIONIC


@dataclass(frozen=True)
class CMRecord:
    """Splitting behaviour required of the CM extension E/F; E is not constructed."""
    inert_primes: tuple[int, ...] = ()
    note: str = CM_EXISTENCE_NOTE

    def __post_init__(self):
        object.__setattr__(self, "inert_primes", tuple(sorted(set(int(p) for p in self.inert_primes))))


@dataclass(frozen=True)
class UnitaryDatum:
    """
    Unitary group of a hermitian form of rank n over a CM extension E/F.

    signatures[i] is (p_v, q_v) at the real place v_(i+1). With `isotropic`
    set, the form is the +-1 diagonal one whose unitary group contains the
    q0-fold product of SL_2 over F, q0 = min q_v.
    """
    field: TotallyRealField
    n: int
    signatures: tuple[tuple[int, int], ...]
    finite_marks: tuple[tuple[FinitePlace, LocalTag], ...] = ()
    cm: CMRecord = CMRecord()
    isotropic: bool = False

    def __post_init__(self):
        signatures = tuple((int(p), int(q)) for p, q in self.signatures)
        object.__setattr__(self, "signatures", signatures)
        object.__setattr__(self, "finite_marks", _normalize_marks(self.finite_marks))

        if self.n < 2:
            raise ConstraintViolation("hermitian rank", f"n = {self.n} < 2")
        if len(signatures) != self.field.degree:
            raise ConstraintViolation(
                "signature count", f"{len(signatures)} signatures for {self.field.degree} real places"
            )
        for p, q in signatures:
            if p + q != self.n or not p >= q >= 0:
                raise ConstraintViolation("signature", f"({p},{q}) with n = {self.n}")

        marked = [place for place, _ in self.finite_marks]
        _check_finite_places(marked, self.field, "finite_marks")
        if marked and self.n % 2:
            raise ConstraintViolation("finite marks parity", "odd n has one local class per p-adic place")
        for place in marked:
            if place.p not in self.cm.inert_primes:
                raise ConstraintViolation("inert marking", f"{place} lies over a prime not inert in E")
        if self.isotropic and self.q0 == 0:
            raise ConstraintViolation("isotropy", "the +-1 diagonal construction needs every q_v > 0")

    @property
    def kind(self) -> DatumKind:
        return DatumKind.UNITARY

    @property
    def q0(self) -> int:
        return min(q for _, q in self.signatures)

    @property
    def marks(self) -> dict[FinitePlace, LocalTag]:
        return dict(self.finite_marks)

    def signature(self, v: RealPlace) -> tuple[int, int]:
        return self.signatures[v.index - 1]


@dataclass(frozen=True)
class TypeDDatum:
    """
    Spin group of a skew-hermitian form of rank n over a quaternion algebra B.

    s_real: places where B splits (local form BD I(q=2)); s_quaternionic:
    places where B is definite (local form D III).
    """
    field: TotallyRealField
    n: int
    s_real: frozenset[RealPlace]
    s_quaternionic: frozenset[RealPlace]
    finite_marks: tuple[tuple[FinitePlace, LocalTag], ...] = ()
    b_ram_finite: frozenset[FinitePlace] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "s_real", real_places(self.s_real))
        object.__setattr__(self, "s_quaternionic", real_places(self.s_quaternionic))
        object.__setattr__(self, "b_ram_finite", frozenset(self.b_ram_finite))
        object.__setattr__(self, "finite_marks", _normalize_marks(self.finite_marks))

        if self.n < 5:
            raise ConstraintViolation("type D rank", f"n = {self.n} < 5")
        d = self.field.degree
        _check_real_places(self.s_real | self.s_quaternionic, d, "type D partition")
        if self.s_real & self.s_quaternionic or len(self.s_real | self.s_quaternionic) != d:
            raise ConstraintViolation("partition", "s_real and s_quaternionic must partition the real places")
        if not self.s_real or not self.s_quaternionic:
            raise ConstraintViolation("nonempty parts", "s_real and s_quaternionic must both be nonempty")

        _check_finite_places(self.b_ram_finite, self.field, "b_ram_finite")
        if (len(self.s_quaternionic) + len(self.b_ram_finite)) % 2:
            raise ConstraintViolation("reciprocity parity", "|s_quaternionic| + |b_ram_finite| is odd")

        marked = [place for place, _ in self.finite_marks]
        _check_finite_places(marked, self.field, "finite_marks")
        ramified_primes = {place.p for place in self.b_ram_finite}
        for place in marked:
            if place.p in ramified_primes:
                raise ConstraintViolation("unramified marking", f"B ramifies over p = {place.p}")

    @property
    def kind(self) -> DatumKind:
        return DatumKind.TYPE_D

    @property
    def marks(self) -> dict[FinitePlace, LocalTag]:
        return dict(self.finite_marks)


Datum = Union[QuaternionDatum, UnitaryDatum, TypeDDatum]


@dataclass(frozen=True)
class ShimuraDatumDescriptor:
    """One family datum plus the recorded existence assumption."""
    datum: Datum
    existence_assumption: str = BOREL_HARDER_NOTE

    def __post_init__(self):
        if not isinstance(self.datum, (QuaternionDatum, UnitaryDatum, TypeDDatum)):
            raise ConstraintViolation("datum variant", type(self.datum).__name__)

    @property
    def kind(self) -> DatumKind:
        return self.datum.kind

    @property
    def field(self) -> TotallyRealField:
        return self.datum.field


@dataclass(frozen=True)
class Violation:
    """A failed construction condition, named "(i)" or "(ii)"."""
    condition: str
    detail: str

    def __str__(self) -> str:
        return f"violation{self.condition}: {self.detail}"

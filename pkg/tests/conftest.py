"""
Pytest configuration and fixtures for the shimforge test suite.
"""
import shutil
import sys
import tempfile
from pathlib import Path

import pytest

# Add the project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from shimforge.arithmetic.polynomial import IntPolynomial
from shimforge.fields.forge import (
    attach_split_primes,
    field_from_definer,
    forge_field,
    split_witness_at,
)
from shimforge.forms.form_types import (
    CMRecord,
    QuaternionDatum,
    ShimuraDatumDescriptor,
    TypeDDatum,
    UnitaryDatum,
)
from shimforge.places.permutations import PlacePermutation
from shimforge.places.place_types import FinitePlace


@pytest.fixture(scope="session")
def project_root():
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test outputs."""
    temp = tempfile.mkdtemp(prefix="shimforge_test_")
    yield Path(temp)
    shutil.rmtree(temp, ignore_errors=True)


@pytest.fixture(scope="session")
def s3_cubic():
    """X^3 - 4X - 1: totally real, discriminant 229, Galois group S_3."""
    return IntPolynomial((-1, -4, 0, 1))


@pytest.fixture(scope="session")
def cyclic_cubic():
    """X^3 - 3X - 1: totally real, discriminant 81, Galois group A_3."""
    return IntPolynomial((-1, -3, 0, 1))


@pytest.fixture(scope="session")
def s3_field(s3_cubic):
    """S_3-certified cubic field with the split prime 37 attached."""
    field = field_from_definer(s3_cubic, prime_bound=10)
    return field.with_split_witness(split_witness_at(s3_cubic, 37))


@pytest.fixture(scope="session")
def cyclic_field(cyclic_cubic):
    """Galois cubic field (uncertified) with the split prime 17 attached."""
    field = field_from_definer(cyclic_cubic, prime_bound=50)
    return field.with_split_witness(split_witness_at(cyclic_cubic, 17))


@pytest.fixture(scope="session")
def quadratic_field():
    """Q(sqrt 5) with the split prime 11 attached."""
    f = IntPolynomial((-5, 0, 1))
    return field_from_definer(f).with_split_witness(split_witness_at(f, 11))


@pytest.fixture(scope="session")
def forged_fields():
    """S_d-certified fields for d = 3..7; d <= 5 carry one split prime."""
    fields = {}
    for d in range(3, 8):
        field, _ = forge_field(d, seed=0)
        fields[d] = attach_split_primes(field, 1) if d <= 5 else field
    return fields


def random_descriptor(rng, field):
    """A valid datum over `field` with random local data."""
    d = field.degree
    witness = field.split_witnesses[0] if field.split_witnesses else None
    places = list(field.real_places)
    slots = list(range(1, d + 1))

    kinds = ["quaternionic", "unitary"]
    if any(witness or (d - k) % 2 == 0 for k in range(1, d)):
        kinds.append("type-d")
    kind = rng.choice(kinds)

    if kind == "quaternionic":
        k = rng.randrange(0, d)
        ram_infinite = rng.sample(places, k)
        ram_finite = []
        if witness:
            m = rng.randrange(0, d + 1)
            if (k + m) % 2:
                m = m - 1 if m > 0 else 1
            ram_finite = [FinitePlace(witness.p, s) for s in rng.sample(slots, m)]
        elif k % 2:
            ram_infinite = ram_infinite[:-1]
        return ShimuraDatumDescriptor(QuaternionDatum(field, ram_infinite, frozenset(ram_finite)))

    if kind == "unitary":
        n = rng.randint(2, 6)
        signatures = []
        for _ in places:
            q = rng.randint(0, n // 2)
            signatures.append((n - q, q))
        marks = {}
        inert = ()
        if witness and n % 2 == 0:
            inert = (witness.p,)
            marks = {FinitePlace(witness.p, s): rng.choice(["type-A", "type-B"]) for s in slots}
        isotropic = all(q > 0 for _, q in signatures) and rng.random() < 0.5
        return ShimuraDatumDescriptor(
            UnitaryDatum(field, n, tuple(signatures), marks, CMRecord(inert), isotropic)
        )

    choices = [k for k in range(1, d) if witness or (d - k) % 2 == 0]
    k = rng.choice(choices)
    s_real = set(rng.sample(places, k))
    s_quaternionic = set(places) - s_real
    b_ram_finite = frozenset()
    marks = {}
    if len(s_quaternionic) % 2:
        b_ram_finite = frozenset({FinitePlace(witness.p, rng.choice(slots))})
    elif witness:
        marks = {FinitePlace(witness.p, s): rng.choice(["type-A", "type-B"]) for s in slots}
    return ShimuraDatumDescriptor(
        TypeDDatum(field, rng.randint(5, 7), s_real, s_quaternionic, marks, b_ram_finite)
    )


def random_permutation(rng, d):
    images = list(range(1, d + 1))
    rng.shuffle(images)
    return PlacePermutation(tuple(images))


@pytest.fixture
def make_descriptor():
    return random_descriptor


@pytest.fixture
def make_permutation():
    return random_permutation

"""
Fields Module

Totally real fields with certified trivial automorphism group, their
completely split primes, and the orbit-marking oracle.
"""
from shimforge.fields.field_types import (
    GaloisCertificate,
    SplitPrimeWitness,
    TotallyRealField,
)
from shimforge.fields.galois import certify_symmetric, replay_galois_certificate
from shimforge.fields.forge import (
    forge_field,
    field_from_definer,
    find_split_prime,
    split_witness_at,
    attach_split_primes,
    replay_split_witness,
)
from shimforge.fields.orbit_oracle import orbit_marking_oracle

__all__ = [
    "GaloisCertificate",
    "SplitPrimeWitness",
    "TotallyRealField",
    "certify_symmetric",
    "replay_galois_certificate",
    "forge_field",
    "field_from_definer",
    "find_split_prime",
    "split_witness_at",
    "attach_split_primes",
    "replay_split_witness",
    "orbit_marking_oracle",
]

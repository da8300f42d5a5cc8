"""
Forms Module

The quaternionic, unitary and type D families with their calculators.
"""
from shimforge.forms.form_types import (
    CMRecord,
    Compactness,
    DatumKind,
    LocalTag,
    QuaternionDatum,
    ShimuraDatumDescriptor,
    TypeDDatum,
    UnitaryDatum,
    Violation,
)
from shimforge.forms.calculators import (
    compactness,
    conjugate_partitions,
    dimension,
    local_real_data,
    minimal_noncompact_unitary,
    real_rank,
    reflex_degree_quaternionic,
    stabilizer_index,
    validate_construction_conditions,
)

__all__ = [
    "CMRecord",
    "Compactness",
    "DatumKind",
    "LocalTag",
    "QuaternionDatum",
    "ShimuraDatumDescriptor",
    "TypeDDatum",
    "UnitaryDatum",
    "Violation",
    "compactness",
    "conjugate_partitions",
    "dimension",
    "local_real_data",
    "minimal_noncompact_unitary",
    "real_rank",
    "reflex_degree_quaternionic",
    "stabilizer_index",
    "validate_construction_conditions",
]

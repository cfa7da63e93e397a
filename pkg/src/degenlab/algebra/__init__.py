"""Bilinear pairs on a 2-dimensional space, basis changes and identities."""

from .identities import (
    IdentitySyntaxError,
    VarietyDef,
    VarietyIdentity,
    VarietyReport,
    Violation,
    check_variety,
    expand_identity,
)
from .closedset import ClosedSetSpec, parse_relation
from .structure import (
    CIRC,
    COORDINATE_INDEX,
    COORDINATES,
    DOT,
    BasisMatrix,
    ParamSpec,
    SingularBasis,
    StructurePair,
    change_basis,
    coordinate_name,
    flat_index,
    format_vector,
    transform_pair,
)
from .varieties import BUILTIN_VARIETIES, variety

__all__ = [
    "BUILTIN_VARIETIES",
    "BasisMatrix",
    "ClosedSetSpec",
    "CIRC",
    "COORDINATES",
    "COORDINATE_INDEX",
    "DOT",
    "IdentitySyntaxError",
    "ParamSpec",
    "SingularBasis",
    "StructurePair",
    "VarietyDef",
    "VarietyIdentity",
    "VarietyReport",
    "Violation",
    "change_basis",
    "check_variety",
    "coordinate_name",
    "expand_identity",
    "flat_index",
    "format_vector",
    "transform_pair",
    "parse_relation",
    "variety",
]

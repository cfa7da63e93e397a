"""Groebner bases over Q(i) and the orbit questions they decide."""

from .groebner import DEFAULT_LIMITS, GroebnerBasis, Limits, MonomialOrder, ResourceLimit, groebner
from .kernel import IMPLEMENTATION
from .orbits import are_isomorphic, isomorphism_system, orbit_meets_set, orbit_system
from .system import PolySystem, buchberger, is_empty_over_C

__all__ = [
    "DEFAULT_LIMITS",
    "GroebnerBasis",
    "IMPLEMENTATION",
    "Limits",
    "MonomialOrder",
    "PolySystem",
    "ResourceLimit",
    "are_isomorphic",
    "buchberger",
    "groebner",
    "is_empty_over_C",
    "isomorphism_system",
    "orbit_meets_set",
    "orbit_system",
]

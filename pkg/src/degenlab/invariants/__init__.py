"""Derivation algebras, orbit dimensions and cheap invariants."""

from .derivations import (
    CheapInvariants,
    DerivationSpace,
    cheap_invariants,
    derivation_rows,
    derivation_space,
    generic_orbit_dimension,
    orbit_dimension,
    verify_derivation,
)

__all__ = [
    "CheapInvariants",
    "DerivationSpace",
    "cheap_invariants",
    "derivation_rows",
    "derivation_space",
    "generic_orbit_dimension",
    "orbit_dimension",
    "verify_derivation",
]

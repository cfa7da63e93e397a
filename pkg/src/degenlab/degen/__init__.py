"""Degeneration witnesses and non-degeneration certificates."""

from .invariance import InvarianceResult, NotInvariant, check_invariance, find_invariant_orientation
from .isomorphisms import (
    NONISOMORPHIC_FAMILIES,
    STATED_IDENTIFICATIONS,
    Identification,
    IsoCheck,
    check_family_distinct,
    check_identification,
    isomorphism_suite,
)
from .nondegen import NonDegenCertificate, TargetCheck, componentwise_filter, source_membership, verify_nondegeneration
from .sampling import MAIN_POOL, RESERVE_POOL, SamplingError, sample_assignments
from .witness import (
    DegenCertificate,
    MismatchAt,
    UnsolvedParameter,
    WitnessOutcome,
    check_witness,
    repair_candidates,
    verify_degeneration,
)

__all__ = [
    "DegenCertificate",
    "Identification",
    "InvarianceResult",
    "IsoCheck",
    "MAIN_POOL",
    "MismatchAt",
    "NONISOMORPHIC_FAMILIES",
    "NonDegenCertificate",
    "NotInvariant",
    "RESERVE_POOL",
    "STATED_IDENTIFICATIONS",
    "SamplingError",
    "TargetCheck",
    "UnsolvedParameter",
    "WitnessOutcome",
    "check_family_distinct",
    "check_identification",
    "check_invariance",
    "check_witness",
    "componentwise_filter",
    "find_invariant_orientation",
    "isomorphism_suite",
    "repair_candidates",
    "sample_assignments",
    "source_membership",
    "verify_degeneration",
    "verify_nondegeneration",
]

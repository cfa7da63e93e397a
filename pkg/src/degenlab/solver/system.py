"""Polynomial systems with inequations and their solvability over C."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..exact import Poly
from .groebner import DEFAULT_LIMITS, GroebnerBasis, Limits, groebner

RABINOWITSCH = "_z"


@dataclass(frozen=True)
class PolySystem:
    """``equations = 0`` together with ``inequations != 0``."""

    variables: Tuple[str, ...]
    equations: Tuple[Poly, ...]
    inequations: Tuple[Poly, ...] = ()

    def __init__(self, variables: Sequence[str], equations: Sequence[Poly], inequations: Sequence[Poly] = ()) -> None:
        variables = tuple(variables)
        if RABINOWITSCH in variables:
            raise ValueError(f"{RABINOWITSCH!r} is reserved for the Rabinowitsch variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        allowed = set(variables)
        for p in tuple(equations) + tuple(inequations):
            stray = set(p.indeterminates) - allowed
            if stray:
                raise ValueError(f"undeclared variables {sorted(stray)} in {p}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "equations", tuple(equations))
        object.__setattr__(self, "inequations", tuple(inequations))

    def saturated(self) -> Tuple[Tuple[str, ...], Tuple[Poly, ...]]:
        """Variables and equations after the Rabinowitsch encoding."""
        if not self.inequations:
            return self.variables, self.equations
        prod = Poly.const(1)
        for q in self.inequations:
            if q.is_zero():
                # 0 != 0 is unsatisfiable
                return self.variables, (Poly.const(1),)
            prod = prod * q
        z = Poly.var(RABINOWITSCH)
        return self.variables + (RABINOWITSCH,), self.equations + (z * prod - 1,)


def buchberger(sys: PolySystem, limits: Limits = DEFAULT_LIMITS, blocks: Optional[Sequence[int]] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the (saturated) system under grevlex."""
    variables, eqs = sys.saturated()
    return groebner(eqs, variables, blocks=blocks, limits=limits)


def is_empty_over_C(sys: PolySystem, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Weak Nullstellensatz: no complex solution iff the basis is {1}."""
    return buchberger(sys, limits).is_unit()

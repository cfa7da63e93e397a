"""Stability of closed sets under triangular basis changes.

A matrix ``g`` acting by ``(g.mu)(x, y) = g mu(g^-1 x, g^-1 y)`` has the
constants of ``mu`` in the basis ``E_i = g^-1 e_i``, whose coordinate rows
form ``(g^-1)^T``.  So ``g`` upper triangular means a lower triangular row
matrix ``E1 = a11 e1, E2 = a21 e1 + a22 e2``, and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.closedset import ClosedSetSpec
from ..algebra.structure import COORDINATE_INDEX, COORDINATES, change_basis_numerators
from ..exact import Poly
from ..solver.groebner import DEFAULT_LIMITS, GroebnerBasis, Limits, groebner
from ..solver.orbits import homogenised_relation

ORIENTATIONS = ("upper", "lower")
_A = ("a11", "a12", "a21", "a22")
_RADICAL = "_y"


class NotInvariant(ValueError):
    """A defining equation of the set fails to vanish after a triangular basis change."""

    def __init__(self, relation: str, orientations: Sequence[str]) -> None:
        super().__init__(f"{relation} not preserved (orientations tried: {', '.join(orientations)})")
        self.relation = relation
        self.orientations = tuple(orientations)


@dataclass(frozen=True)
class InvarianceResult:
    orientation: str
    method: str  # "ideal" or "radical"
    checked: int
    tried: Tuple[str, ...] = field(default=())


def triangular_rows(orientation: str) -> Tuple[Tuple[Poly, Poly], Tuple[Poly, Poly]]:
    a11, a12, a21, a22 = (Poly.var(n) for n in _A)
    zero = Poly.const(0)
    if orientation == "upper":
        return (a11, zero), (a21, a22)
    if orientation == "lower":
        return (a11, a12), (zero, a22)
    raise ValueError(f"orientation must be one of {ORIENTATIONS}")


def _coefficients_in_group_vars(p: Poly) -> List[Poly]:
    """Split ``p`` into its coefficients with respect to the monomials in the a-variables."""
    parts: Dict[tuple, Dict[tuple, object]] = {}
    for mono, c in p.items():
        gpart = tuple((n, k) for n, k in mono if n in _A)
        rest = tuple((n, k) for n, k in mono if n not in _A)
        parts.setdefault(gpart, {})[rest] = c
    return [Poly(v) for v in parts.values()]


def transformed_equations(c: ClosedSetSpec, orientation: str) -> List[Tuple[str, Poly]]:
    """Defining equations of ``C`` evaluated on a generic triangular change of a generic point.

    Each entry is ``(label, numerator)``; the numerator is a polynomial in
    the coordinates, the parameters of ``C`` and the a-variables.
    """
    consts = [Poly.var(n) for n in COORDINATES]
    nums, det = change_basis_numerators(consts, triangular_rows(orientation))
    out = [(name, nums[COORDINATE_INDEX[name]]) for name in c.zero_coordinates()]
    out += [(f"{r} = 0", homogenised_relation(r, nums, det)) for r in c.relations]
    return out


class _Membership:
    """Membership in the ideal of a closed set, and in its radical."""

    def __init__(self, c: ClosedSetSpec, limits: Limits) -> None:
        self.zero = {n: 0 for n in c.zero_coordinates()}
        self.variables = tuple(c.mentioned()) + tuple(c.params)
        self.relations = [r.substitute(self.zero) for r in c.relations]
        self.limits = limits
        self._gb: Optional[GroebnerBasis] = None

    def restrict(self, p: Poly) -> Poly:
        return p.substitute(self.zero)

    def basis(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner(self.relations, self.variables, limits=self.limits)
        return self._gb

    def in_ideal(self, p: Poly) -> bool:
        p = self.restrict(p)
        if p.is_zero():
            return True
        if not self.relations:
            return False
        return self.basis().contains(p)

    def in_radical(self, p: Poly) -> bool:
        p = self.restrict(p)
        if p.is_zero():
            return True
        y = Poly.var(_RADICAL)
        return groebner(self.relations + [y * p - 1], self.variables + (_RADICAL,), limits=self.limits).is_unit()


def check_invariance(c: ClosedSetSpec, orientation: str, limits: Limits = DEFAULT_LIMITS) -> InvarianceResult:
    """Check that ``C`` is stable under the triangular matrices of one orientation.

    Every transformed equation, split into coefficients of the group
    variables, must lie in the ideal of ``C`` (or, failing that, in its
    radical).  Raises :class:`NotInvariant` otherwise.
    """
    member = _Membership(c, limits)
    pieces = []
    for label, p in transformed_equations(c, orientation):
        for coeff in _coefficients_in_group_vars(p):
            pieces.append((label, coeff))
    pending = [(label, q) for label, q in pieces if not member.in_ideal(q)]
    if not pending:
        return InvarianceResult(orientation, "ideal", len(pieces))
    for label, q in pending:
        if not member.in_radical(q):
            raise NotInvariant(label, (orientation,))
    return InvarianceResult(orientation, "radical", len(pieces))


def find_invariant_orientation(c: ClosedSetSpec, limits: Limits = DEFAULT_LIMITS) -> InvarianceResult:
    """Try both orientations in order and return the first that passes."""
    failures = []
    for orientation in ORIENTATIONS:
        try:
            res = check_invariance(c, orientation, limits)
        except NotInvariant as exc:
            failures.append(exc.relation)
            continue
        return InvarianceResult(res.orientation, res.method, res.checked, tuple(ORIENTATIONS[: len(failures) + 1]))
    raise NotInvariant("; ".join(failures), ORIENTATIONS)

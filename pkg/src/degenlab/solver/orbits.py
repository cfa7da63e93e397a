"""Orbit questions for the basis-change action, decided by Groebner bases."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from ..algebra.closedset import ClosedSetSpec
from ..algebra.structure import COORDINATE_INDEX, StructurePair, change_basis_numerators
from ..exact import Poly
from .groebner import DEFAULT_LIMITS, Limits
from .system import PolySystem, is_empty_over_C

G_VARS = ("g11", "g12", "g21", "g22")


def generic_rows() -> Tuple[Tuple[Poly, Poly], Tuple[Poly, Poly]]:
    g = [Poly.var(n) for n in G_VARS]
    return (g[0], g[1]), (g[2], g[3])


def transformed_numerators(pair: StructurePair) -> Tuple[List[Poly], Poly]:
    """Constants of ``pair`` in the basis ``E_i = g_i1 e1 + g_i2 e2``, as numerators over det."""
    return change_basis_numerators(pair.constants(), generic_rows())


def _require_concrete(pair: StructurePair, what: str) -> None:
    if not pair.is_concrete():
        raise ValueError(f"{what} must have all parameters substituted")


def isomorphism_system(a: StructurePair, b: StructurePair) -> PolySystem:
    nums, det = transformed_numerators(a)
    eqs = [n - det.scale(c.constant_value()) if not c.is_zero() else n for n, c in zip(nums, b.constants())]
    eqs = [e for e in eqs if not e.is_zero()]
    return PolySystem(G_VARS, eqs, (det,))


def are_isomorphic(a: StructurePair, b: StructurePair, limits: Limits = DEFAULT_LIMITS, prefilter: bool = True) -> bool:
    """True iff some invertible basis change maps ``a`` onto ``b``."""
    _require_concrete(a, "first pair")
    _require_concrete(b, "second pair")
    if prefilter:
        from ..invariants import cheap_invariants

        if cheap_invariants(a) != cheap_invariants(b):
            return False
    return not is_empty_over_C(isomorphism_system(a, b), limits)


def homogenised_relation(rel: Poly, nums: Sequence[Poly], det: Poly) -> Poly:
    """``rel(nums/det) * det^D`` with ``D`` the degree of ``rel`` in the coordinates.

    Names of ``rel`` that are not coordinates are kept as coefficients.
    """
    by_degree = {}
    for mono, c in rel.items():
        e = sum(k for name, k in mono if name in COORDINATE_INDEX)
        by_degree.setdefault(e, []).append((mono, c))
    top = max(by_degree)
    det_pow = [Poly.const(1)]
    for _ in range(top):
        det_pow.append(det_pow[-1] * det)
    total = Poly.const(0)
    cache = {}
    for e, items in by_degree.items():
        part = Poly.const(0)
        for mono, c in items:
            term = Poly.const(c)
            for name, k in mono:
                key = (name, k)
                if key not in cache:
                    base = nums[COORDINATE_INDEX[name]] if name in COORDINATE_INDEX else Poly.var(name)
                    cache[key] = base ** k
                term = term * cache[key]
            part = part + term
        total = total + part * det_pow[top - e]
    return total


def orbit_system(target: StructurePair, c: ClosedSetSpec) -> PolySystem:
    """Equations for 'some basis change of ``target`` lies in ``c``'."""
    if c.params:
        raise ValueError(f"closed set still depends on parameters {list(c.params)}")
    nums, det = transformed_numerators(target)
    eqs = [nums[COORDINATE_INDEX[name]] for name in c.zero_coordinates()]
    eqs += [homogenised_relation(r, nums, det) for r in c.relations]
    eqs = [e for e in eqs if not e.is_zero()]
    return PolySystem(G_VARS, eqs, (det,))


def orbit_meets_set(target: StructurePair, c: ClosedSetSpec, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff the orbit of ``target`` intersects ``c``."""
    _require_concrete(target, "target")
    return not is_empty_over_C(orbit_system(target, c), limits)

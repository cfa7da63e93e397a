"""Checking the automorphism families listed for the base algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..algebra.structure import DOT, BasisMatrix, change_basis
from ..exact import Q, RatFun
from ..exact.expr import parse_ratfun
from ..invariants import derivation_space
from .models import AutFamily, Catalog

BASE_VARIETY = "comm-assoc"
BASE_IDS = ("A01", "A02", "A03", "A04")
_PROBES = (Q(-1), Q(1, 3), Q(2), Q(5, 2))


@dataclass(frozen=True)
class FamilyCheck:
    label: str
    params: Tuple[str, ...]
    preserves: bool
    residuals: Tuple[str, ...]  # nonzero differences of the first product, by coordinate index
    invertible: bool

    @property
    def ok(self) -> bool:
        return self.preserves and self.invertible


@dataclass(frozen=True)
class AutomorphismReport:
    base: str
    families: Tuple[FamilyCheck, ...]
    parameter_count: int
    derivation_dimension: int

    @property
    def dimension_consistent(self) -> bool:
        return self.parameter_count == self.derivation_dimension

    @property
    def ok(self) -> bool:
        return bool(self.families) and all(f.ok for f in self.families) and self.dimension_consistent


def _invertible(m: BasisMatrix, fam: AutFamily) -> bool:
    """The determinant is nonzero wherever the exclusions are."""
    det = m.det()
    if det.is_zero():
        return False
    excl = [parse_ratfun(x, fam.params) for x in fam.exclusions]
    for values in itertools.product(_PROBES + (Q(0),), repeat=len(fam.params)):
        point = dict(zip(fam.params, values))
        if any(e.substitute(point).is_zero() for e in excl):
            continue
        if det.substitute(point).is_zero():
            return False
    return True


def check_family(catalog: Catalog, base: str, fam: AutFamily) -> FamilyCheck:
    entry = catalog.entry(BASE_VARIETY, base)
    m = BasisMatrix.of([[parse_ratfun(x, fam.params) for x in row] for row in fam.rows])
    old = [RatFun(p) for p in entry.pair.constants()]
    try:
        new = change_basis(entry.pair, m)
    except ArithmeticError:
        return FamilyCheck(fam.label, fam.params, False, ("singular",), False)
    residuals = tuple(f"{k}: {new[k] - old[k]}" for k in range(8 * DOT, 8 * DOT + 8) if new[k] != old[k])
    return FamilyCheck(fam.label, fam.params, not residuals, residuals, _invertible(m, fam))


def verify_automorphisms(
    base: str, catalog: Optional[Catalog] = None, families: Optional[Sequence[AutFamily]] = None
) -> AutomorphismReport:
    """Check each family against the product of ``base`` and compare its dimension with dim Der.

    ``families`` defaults to the families stored on the catalog entry.  A
    family with no parameters is a finite group element and counts zero.
    """
    if catalog is None:
        from .builtin import builtin_catalog

        catalog = builtin_catalog()
    if base not in BASE_IDS:
        raise ValueError(f"automorphisms are listed only for {', '.join(BASE_IDS)}")
    entry = catalog.entry(BASE_VARIETY, base)
    fams = tuple(entry.automorphisms if families is None else families)
    checks = tuple(check_family(catalog, base, f) for f in fams)
    count = max((len(f.params) for f in fams), default=0)
    return AutomorphismReport(base, checks, count, derivation_space(entry.pair).dimension)

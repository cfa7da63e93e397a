"""Non-degeneration certificates from invariant closed sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.structure import CIRC, DOT, StructurePair
from ..catalog.models import Catalog, NonDegenRow, TargetSpec
from ..exact import Poly, RatFun, format_number
from ..exact.expr import parse_ratfun
from ..solver.groebner import DEFAULT_LIMITS, Limits, ResourceLimit
from ..solver.orbits import orbit_meets_set
from .instances import entry_exclusions, instantiate, is_admissible, parse_args
from .invariance import InvarianceResult, NotInvariant, find_invariant_orientation
from .sampling import SamplingError, sample_assignments


@dataclass(frozen=True)
class TargetCheck:
    target: str
    sample: Tuple[Tuple[str, str], ...]
    disjoint: bool


@dataclass(frozen=True)
class NonDegenCertificate:
    row: str
    closed_set: str
    membership: Tuple[str, ...]  # nonzero residuals; empty means the source lies in the set
    invariance: Optional[InvarianceResult]
    invariance_error: str
    checks: Tuple[TargetCheck, ...]
    errors: Tuple[str, ...] = ()

    @property
    def certified(self) -> bool:
        return (
            not self.membership
            and self.invariance is not None
            and not self.errors
            and bool(self.checks)
            and all(c.disjoint for c in self.checks)
        )

    def failures(self) -> List[str]:
        out = []
        if self.membership:
            out.append("source not in set: " + "; ".join(self.membership))
        if self.invariance is None:
            out.append("not invariant: " + self.invariance_error)
        out.extend(self.errors)
        out.extend(f"orbit of {c.target} at {dict(c.sample)} meets the set" for c in self.checks if not c.disjoint)
        return out


def source_membership(catalog: Catalog, row: NonDegenRow) -> Tuple[str, ...]:
    """Residuals of the source representative; empty iff it lies in the set identically."""
    entry = catalog.entry(row.variety, row.source)
    c = row.closed_set
    if row.family:
        pair = entry.pair
    else:
        args = parse_args(row.source_args, c.params)
        pair = instantiate(entry, args, c.params)
    return tuple(f"{k} -> {v}" for k, v in c.residuals(pair).items())


def _target_conditions(catalog: Catalog, row: NonDegenRow, spec: TargetSpec, names: Sequence[str]):
    entry = catalog.entry(row.variety, spec.id)
    args = parse_args(spec.args, names)
    nonzero = [parse_ratfun(x, names) for x in spec.conditions]
    nonzero += [parse_ratfun(x, names) for x in row.conditions]
    nonzero += entry_exclusions(entry, args)
    groups = [[parse_ratfun(x, names) for x in g] for g in spec.any]
    src = catalog.entry(row.variety, row.source)
    if not row.family and src.params:
        nonzero += entry_exclusions(src, parse_args(row.source_args, names))
    return entry, args, nonzero, groups


def _admits(values, nonzero, groups) -> bool:
    if not is_admissible(values, nonzero):
        return False
    for g in groups:
        if all(p.num.evaluate(values) == 0 for p in g):
            return False
    return True


def verify_nondegeneration(
    catalog: Catalog,
    row: NonDegenRow,
    samples: int = 3,
    seed: int = 0,
    limits: Limits = DEFAULT_LIMITS,
) -> NonDegenCertificate:
    c = row.closed_set
    membership = source_membership(catalog, row)
    try:
        inv: Optional[InvarianceResult] = find_invariant_orientation(c, limits)
        inv_error = ""
    except NotInvariant as exc:
        inv, inv_error = None, str(exc)
    checks: List[TargetCheck] = []
    errors: List[str] = []
    for spec in row.targets:
        symbols = tuple(dict.fromkeys(tuple(c.params) + tuple(spec.symbols)))
        entry, args, nonzero, groups = _target_conditions(catalog, row, spec, symbols)
        try:
            assignments = sample_assignments(symbols, samples, seed, lambda v: _admits(v, nonzero, groups))
        except SamplingError as exc:
            errors.append(f"{spec.id}: {exc}")
            continue
        for values in assignments:
            target = instantiate(entry, [a.substitute(values) for a in args])
            cs = c.specialise({k: v for k, v in values.items() if k in c.params})
            label = tuple((k, format_number(v)) for k, v in values.items())
            try:
                meets = orbit_meets_set(target, cs, limits)
            except ResourceLimit as exc:
                errors.append(f"{spec.id} at {dict(label)}: {exc}")
                continue
            checks.append(TargetCheck(spec.id, label, not meets))
    return NonDegenCertificate(row.id, c.describe(), membership, inv, inv_error, tuple(checks), tuple(errors))


def componentwise_filter(source: StructurePair, target: StructurePair) -> str:
    """``impossible`` when a product vanishing in the source is nonzero in the target."""
    for p in (DOT, CIRC):
        if source.product_is_zero(p) and not target.product_is_zero(p):
            return "impossible"
    return "possible"

"""Irreducible components read off the degeneration graph, checked against a claim."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .graph import FAMILY, RIGID, DegenGraph, transitive_closure

UNKNOWN, DOMINATED, UNCERTIFIED, UNCOVERED = "unknown-node", "dominated", "uncertified-non-degeneration", "not-covered"


@dataclass(frozen=True)
class ClaimViolation:
    node: str
    condition: str
    detail: str


@dataclass(frozen=True)
class ComponentReport:
    variety: str
    components: Tuple[str, ...]
    claimed: Tuple[str, ...]
    violations: Tuple[ClaimViolation, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def matches_claim(self) -> bool:
        return set(self.components) == set(self.claimed)


class InconsistentClaim(ValueError):
    """A claimed component list contradicts the verified graph."""

    def __init__(self, report: ComponentReport) -> None:
        first = report.violations[0]
        more = f" (+{len(report.violations) - 1} more)" if len(report.violations) > 1 else ""
        super().__init__(f"{report.variety}: {first.node}: {first.condition}: {first.detail}{more}")
        self.report = report
        self.node = first.node
        self.condition = first.condition


def component_candidates(g: DegenGraph) -> Tuple[str, ...]:
    return tuple(n.key for n in g.nodes if n.kind in (RIGID, FAMILY))


def irreducible_components(g: DegenGraph, claim: Optional[Sequence[str]] = None, strict: bool = True) -> ComponentReport:
    """Candidates (rigid algebras and whole families) not reached from another candidate.

    With a ``claim``: each claimed node must be a candidate, reached from no
    other candidate, and every certified-or-not non-degeneration aimed at it
    from another candidate must be certified; every node must be reachable
    from some claimed node.  ``strict`` raises :class:`InconsistentClaim`.
    """
    closed = transitive_closure(g)
    pairs = closed.pairs()
    cands = component_candidates(closed)
    comps = tuple(c for c in cands if not any((d, c) in pairs for d in cands if d != c))
    if claim is None:
        return ComponentReport(g.variety, comps, ())
    claimed = tuple(claim)
    violations = []
    for k in claimed:
        if k not in cands:
            violations.append(ClaimViolation(k, UNKNOWN, "not a rigid algebra or family of the graph"))
            continue
        for d in cands:
            if d != k and (d, k) in pairs:
                violations.append(ClaimViolation(k, DOMINATED, f"reached from {d}"))
        entry = closed.node(k).entry
        for ne in closed.nonedges:
            if ne.target == entry and ne.scope in (RIGID, FAMILY) and ne.source != k and not ne.certified:
                violations.append(ClaimViolation(k, UNCERTIFIED, f"{ne.row} at {dict(ne.sample)}"))
    covered = set(k for k in claimed if closed.has_node(k))
    for k in list(covered):
        covered |= closed.reachable(k)
    for n in closed.nodes:
        if n.key not in covered:
            violations.append(ClaimViolation(n.key, UNCOVERED, "not reachable from any claimed component"))
    report = ComponentReport(g.variety, comps, claimed, _dedupe(violations))
    if strict and violations:
        raise InconsistentClaim(report)
    return report


def _dedupe(items):
    seen, out = set(), []
    for v in items:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return tuple(out)

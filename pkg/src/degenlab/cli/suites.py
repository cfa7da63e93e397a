"""Verification suites producing report records."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.identities import check_variety
from ..catalog import Catalog, verify_automorphisms
from ..catalog.automorphisms import BASE_IDS, BASE_VARIETY
from ..catalog.builtin._dsl import symbols_in
from ..degen import (
    NonDegenCertificate,
    SamplingError,
    WitnessOutcome,
    check_witness,
    isomorphism_suite,
    sample_assignments,
    verify_nondegeneration,
)
from ..degen.instances import entry_exclusions, instantiate, is_admissible, parse_args
from ..exact import format_number
from ..exact.expr import parse_ratfun
from ..geometry import build_graph, consistency_conflicts, irreducible_components, transitive_closure
from ..geometry.graph import DegenGraph
from ..invariants import generic_orbit_dimension, orbit_dimension
from .report import Record, record

THREADS_ENV = "DEGENLAB_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    return os.cpu_count() or 1


# parallel map over independent rows ---------------------------------------------

_WORKER: Dict[str, object] = {}


def _init_worker(catalog: Catalog, seed: int, samples: int) -> None:
    _WORKER.update(catalog=catalog, seed=seed, samples=samples)


def _witness_task(row_id: str) -> WitnessOutcome:
    cat: Catalog = _WORKER["catalog"]  # type: ignore[assignment]
    row = next(w for w in cat.witnesses if w.id == row_id)
    return check_witness(cat, row, seed=_WORKER["seed"])  # type: ignore[arg-type]


def _nondegen_task(row_id: str) -> NonDegenCertificate:
    cat: Catalog = _WORKER["catalog"]  # type: ignore[assignment]
    row = next(r for r in cat.nondegen if r.id == row_id)
    return verify_nondegeneration(cat, row, samples=_WORKER["samples"], seed=_WORKER["seed"])  # type: ignore[arg-type]


def _pmap(fn: Callable, items: Sequence[str], catalog: Catalog, seed: int, samples: int, threads: int) -> List:
    if threads <= 1 or len(items) < 8:
        _init_worker(catalog, seed, samples)
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(catalog, seed, samples)) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


@dataclass
class Context:
    catalog: Catalog
    seed: int = 0
    samples: int = 3
    threads: int = 1
    _outcomes: Optional[Dict[str, WitnessOutcome]] = None
    _certs: Optional[Dict[str, NonDegenCertificate]] = None

    def varieties(self, variety: Optional[str]) -> Tuple[str, ...]:
        names = self.catalog.variety_names()
        if variety is None:
            return names
        if variety not in names:
            raise KeyError(variety)
        return (variety,)

    def outcomes(self, varieties: Sequence[str]) -> Dict[str, WitnessOutcome]:
        """Witness outcomes, each row checked at most once per context."""
        if self._outcomes is None:
            self._outcomes = {}
        todo = [w.id for w in self.catalog.witnesses if w.variety in varieties and w.id not in self._outcomes]
        for o in _pmap(_witness_task, todo, self.catalog, self.seed, self.samples, self.threads):
            self._outcomes[o.row.id] = o
        return {w.id: self._outcomes[w.id] for w in self.catalog.witnesses if w.variety in varieties}

    def certificates(self, varieties: Sequence[str]) -> Dict[str, NonDegenCertificate]:
        if self._certs is None:
            self._certs = {}
        todo = [r.id for r in self.catalog.nondegen if r.variety in varieties and r.id not in self._certs]
        for c in _pmap(_nondegen_task, todo, self.catalog, self.seed, self.samples, self.threads):
            self._certs[c.row] = c
        return {r.id: self._certs[r.id] for r in self.catalog.nondegen if r.variety in varieties}

    def graph(self, variety: str) -> DegenGraph:
        return build_graph(self.catalog, variety, self.outcomes((variety,)), self.certificates((variety,)))


# suites ---------------------------------------------------------------------------


def identity_records(ctx: Context, variety: Optional[str] = None) -> List[Record]:
    out = []
    for v in ctx.varieties(variety):
        vdef = ctx.catalog.variety(v)
        for e in ctx.catalog.entries_of(v):
            rep = check_variety(e.pair, vdef)
            out.append(
                record(
                    f"identity:{v}:{e.id}",
                    "identity",
                    "pass" if rep.passed else "fail",
                    [str(x) for x in rep.violations],
                    laws=len(vdef.laws),
                    params=",".join(e.params) or "-",
                )
            )
    return out


def automorphism_records(ctx: Context) -> List[Record]:
    if BASE_VARIETY not in ctx.catalog.variety_names():
        return []
    out = []
    for base in BASE_IDS:
        rep = verify_automorphisms(base, ctx.catalog)
        diags = [f"{f.label}: {'; '.join(f.residuals) or 'not invertible'}" for f in rep.families if not f.ok]
        if not rep.dimension_consistent:
            diags.append(f"{rep.parameter_count} parameters but dim Der = {rep.derivation_dimension}")
        if not rep.families:
            diags.append("no automorphism families listed")
        out.append(
            record(
                f"automorphism:{base}",
                "automorphism",
                "pass" if rep.ok else "fail",
                diags,
                families=len(rep.families),
                parameters=rep.parameter_count,
                der_dimension=rep.derivation_dimension,
            )
        )
    return out


def degeneration_records(ctx: Context, variety: Optional[str] = None) -> List[Record]:
    out = []
    for o in ctx.outcomes(ctx.varieties(variety)).values():
        diags = [o.error] if o.error else []
        values = {"group": o.row.group, "origin": o.row.origin}
        if o.repaired is not None:
            diags.append(f"repaired basis: {o.repaired.basis}")
        if o.certificate is not None:
            values["samples"] = len(o.certificate.samples)
            values["limits"] = " ".join(o.certificate.limits)
            if o.certificate.solved:
                values["solved"] = ", ".join(f"{k}={v}" for k, v in o.certificate.solved)
        out.append(record(f"degeneration:{o.row.id}", "degeneration", o.status, diags, **values))
    return out


def nondegeneration_records(ctx: Context, variety: Optional[str] = None) -> List[Record]:
    out = []
    for row_id, c in ctx.certificates(ctx.varieties(variety)).items():
        values = {"checks": len(c.checks), "closed_set": c.closed_set}
        if c.invariance is not None:
            values["orientation"] = c.invariance.orientation
        out.append(record(f"nondegeneration:{row_id}", "nondegeneration", "pass" if c.certified else "fail", c.failures(), **values))
    return out


def dimension_records(ctx: Context, variety: Optional[str] = None) -> List[Record]:
    """Figure levels against orbit dimensions at sampled members and at the generic member."""
    out = []
    for v in ctx.varieties(variety):
        fig = ctx.catalog.figure(v)
        if fig is None:
            continue
        for node in fig.nodes:
            entry = ctx.catalog.entry(v, node.entry)
            syms = symbols_in(*node.args, *node.where)
            args = parse_args(node.args, syms)
            nonzero = [parse_ratfun(w, syms) for w in node.where] + entry_exclusions(entry, args)
            diags, seen = [], []
            try:
                points = sample_assignments(syms, ctx.samples, ctx.seed, lambda x: is_admissible(x, nonzero))
            except SamplingError as exc:
                out.append(record(f"dimension:{v}:{node.key}", "dimension", "fail", [str(exc)], level=node.level))
                continue
            for values in points:
                d = orbit_dimension(instantiate(entry, [a.substitute(values) for a in args]))
                seen.append(d)
                if d != node.level:
                    label = ",".join(f"{k}={format_number(x)}" for k, x in values.items())
                    diags.append(f"orbit dimension {d} at {label or 'the representative'}")
            extra = {}
            if syms:
                generic = generic_orbit_dimension(instantiate(entry, args, syms), seed=ctx.seed)
                extra["generic"] = generic
                if generic != node.level:
                    diags.append(f"generic orbit dimension {generic}")
            out.append(
                record(
                    f"dimension:{v}:{node.key}",
                    "dimension",
                    "fail" if diags else "pass",
                    diags,
                    level=node.level,
                    computed=",".join(str(d) for d in sorted(set(seen))),
                    **extra,
                )
            )
    return out


def isomorphism_records(ctx: Context) -> List[Record]:
    out = []
    for c in isomorphism_suite(ctx.catalog, ctx.samples, ctx.seed):
        out.append(record(f"isomorphism:{c.id}", "isomorphism", "pass" if c.passed else "fail", c.diagnostics, samples="; ".join(c.samples)))
    return out


def component_records(ctx: Context, variety: Optional[str] = None) -> List[Record]:
    out = []
    for v in ctx.varieties(variety):
        g = ctx.graph(v)
        claim = ctx.catalog.claim(v)
        rep = irreducible_components(g, claim.claim if claim else None, strict=False)
        conflicts = consistency_conflicts(transitive_closure(g))
        diags = [f"{x.node}: {x.condition}: {x.detail}" for x in rep.violations]
        diags += [f"edge {hit} contradicts certified non-degeneration {ne.row}" for ne, hit in conflicts]
        values = {"computed": ", ".join(rep.components), "nodes": len(g.nodes), "edges": len(g.edges)}
        if claim is None:
            status = "undetermined"
            diags.append("no component claim recorded")
        else:
            values["claimed"] = ", ".join(claim.claim)
            if not rep.matches_claim:
                missing = sorted(set(claim.claim) - set(rep.components))
                extra = sorted(set(rep.components) - set(claim.claim))
                diags.append(f"claimed but not computed: {missing}; computed but not claimed: {extra}")
            status = "pass" if rep.matches_claim and rep.consistent and not conflicts else "fail"
        out.append(record(f"components:{v}", "components", status, diags, **values))
    return out


def all_records(ctx: Context) -> List[Record]:
    return (
        identity_records(ctx)
        + automorphism_records(ctx)
        + degeneration_records(ctx)
        + nondegeneration_records(ctx)
        + dimension_records(ctx)
        + isomorphism_records(ctx)
        + component_records(ctx)
    )

"""Degeneration graphs assembled from verified witnesses and certified non-degenerations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from ..algebra.structure import DOT
from ..catalog.models import ZERO_ID, Catalog, CatalogEntry, Figure, NonDegenRow, WitnessRow
from ..degen import NonDegenCertificate, WitnessOutcome, check_witness
from ..degen.instances import instantiate, parse_args, simultaneous
from ..degen.witness import radical_bindings
from ..exact import Q, RatFun
from ..exact.expr import parse_ratfun
from ..invariants import generic_orbit_dimension, orbit_dimension
from ..invariants.linalg import rank

T = "t"
RIGID, FAMILY, MEMBER, SUBFAMILY = "rigid", "family", "member", "subfamily"
# edge kinds: a verified witness, family-to-member inclusion, the automatic edge to the zero pair,
# an edge implied by transitivity, and a figure edge
WITNESS, INCLUSION, ZERO, IMPLIED, DRAWN = "witness", "inclusion", "zero", "implied", "figure"
CANONICAL = ("alpha", "beta", "gamma", "delta", "eps", "lam")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
# generic rational point for Jacobian ranks; shifted along the list if a denominator vanishes
_GENERIC = (Q(13, 7), Q(-29, 11), Q(41, 5), Q(-17, 3), Q(53, 19), Q(7, 23), Q(-61, 13))


@dataclass(frozen=True)
class GraphNode:
    """A rigid algebra, a whole family, one member, or a lower-dimensional subfamily.

    ``level`` is the orbit dimension of a generic representative; ``dimension``
    adds the number of effective parameters.
    """

    key: str
    entry: str
    kind: str
    level: int
    dimension: int
    args: Tuple[str, ...] = ()
    label: str = ""
    zero_dot: bool = False


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    kind: str
    rows: Tuple[str, ...] = ()
    label: str = ""
    verified: bool = True


@dataclass(frozen=True)
class NonEdge:
    """One sampled target of a non-degeneration row.

    ``scope`` is ``rigid`` or ``family`` when ``source`` is a graph node, and
    ``member`` when the row speaks about individual family members.
    """

    row: str
    source: str
    scope: str
    target: str
    target_keys: Tuple[str, ...]
    sample: Tuple[Tuple[str, str], ...]
    certified: bool


@dataclass(frozen=True)
class DegenGraph:
    variety: str
    nodes: Tuple[GraphNode, ...] = ()
    edges: Tuple[GraphEdge, ...] = ()
    nonedges: Tuple[NonEdge, ...] = ()
    _index: Dict[str, GraphNode] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        nodes = tuple(sorted(self.nodes, key=lambda n: n.key))
        keys = {n.key for n in nodes}
        if len(keys) != len(nodes):
            raise ValueError("duplicate node keys")
        for e in self.edges:
            if e.source not in keys or e.target not in keys:
                raise ValueError(f"edge {e.source} -> {e.target} has an unknown endpoint")
        edges = _merge_edges(self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "nonedges", tuple(sorted(self.nonedges, key=lambda x: (x.row, x.target, x.sample))))
        object.__setattr__(self, "_index", {n.key: n for n in nodes})

    def node(self, key: str) -> GraphNode:
        return self._index[key]

    def has_node(self, key: str) -> bool:
        return key in self._index

    def pairs(self) -> FrozenSet[Tuple[str, str]]:
        return frozenset((e.source, e.target) for e in self.edges)

    def successors(self, key: str) -> Tuple[str, ...]:
        return tuple(e.target for e in self.edges if e.source == key)

    def reachable(self, key: str) -> Set[str]:
        """Nodes reachable from ``key`` by at least one edge."""
        adj = _adjacency(self.edges)
        seen: Set[str] = set()
        stack = list(adj.get(key, ()))
        while stack:
            k = stack.pop()
            if k not in seen:
                seen.add(k)
                stack.extend(adj.get(k, ()))
        return seen

    def members_of(self, entry: str) -> Tuple[str, ...]:
        return tuple(n.key for n in self.nodes if n.entry == entry)


def _adjacency(edges: Iterable[GraphEdge]) -> Dict[str, List[str]]:
    adj: Dict[str, List[str]] = {}
    for e in edges:
        adj.setdefault(e.source, []).append(e.target)
    return adj


_KIND_ORDER = {WITNESS: 0, DRAWN: 1, INCLUSION: 2, ZERO: 3, IMPLIED: 4}


def _merge_edges(edges: Iterable[GraphEdge]) -> Tuple[GraphEdge, ...]:
    """One edge per ordered pair; rows and labels are pooled, the strongest kind wins."""
    by_pair: Dict[Tuple[str, str], GraphEdge] = {}
    for e in edges:
        if e.source == e.target:
            continue
        key = (e.source, e.target)
        old = by_pair.get(key)
        if old is None:
            by_pair[key] = GraphEdge(e.source, e.target, e.kind, tuple(sorted(set(e.rows))), e.label, e.verified)
            continue
        kind = min(old.kind, e.kind, key=lambda k: _KIND_ORDER.get(k, 9))
        labels = sorted({x for x in (old.label, e.label) if x})
        by_pair[key] = GraphEdge(
            e.source, e.target, kind, tuple(sorted(set(old.rows) | set(e.rows))), "; ".join(labels), old.verified or e.verified
        )
    return tuple(by_pair[k] for k in sorted(by_pair))


# node classification ----------------------------------------------------------


def _format_args(args: Sequence[RatFun]) -> str:
    return ",".join(str(a) for a in args)


def jacobian_rank(args: Sequence[RatFun], symbols: Sequence[str]) -> int:
    """Rank of d(args)/d(symbols) at a generic rational point."""
    if not symbols:
        return 0
    for shift in range(len(_GENERIC)):
        point = {s: _GENERIC[(k + shift) % len(_GENERIC)] for k, s in enumerate(symbols)}
        try:
            rows = [[a.derivative(s).evaluate(point) for s in symbols] for a in args]
        except ZeroDivisionError:
            continue
        return rank(rows)
    raise ValueError("no generic point found for the Jacobian")


def _canonical(args: Sequence[RatFun], symbols: Sequence[str]) -> List[RatFun]:
    """Rename the symbols of ``args`` to alpha, beta, ... in order of appearance."""
    order: List[str] = []
    for a in args:
        for name in _NAME.findall(str(a)):
            if name in symbols and name not in order:
                order.append(name)
    rename = simultaneous({s: None for s in order})
    final = {f"_p{k}": RatFun.var(CANONICAL[k]) for k in range(len(order))}
    return [a.substitute(rename).substitute(final) for a in args]


def classify(entry: CatalogEntry, args: Sequence[RatFun], symbols: Sequence[str]) -> Tuple[str, str]:
    """Graph node key and kind reached by ``entry`` at ``args`` (expressions in ``t`` and ``symbols``)."""
    if not entry.params:
        return entry.id, RIGID
    if any(T in a.indeterminates for a in args):
        return f"{entry.id}*", FAMILY
    free = [s for s in symbols if any(s in a.indeterminates for a in args)]
    if not free:
        return f"{entry.id}^{{{_format_args(args)}}}", MEMBER
    if jacobian_rank(args, free) == len(entry.params):
        return f"{entry.id}*", FAMILY
    return f"{entry.id}^{{{_format_args(_canonical(args, free))}}}", SUBFAMILY


def _make_node(entry: CatalogEntry, key: str, kind: str, args: Sequence[RatFun], symbols: Sequence[str]) -> GraphNode:
    zero_dot = entry.pair.product_is_zero(DOT)
    if kind == RIGID:
        d = orbit_dimension(entry.pair)
        return GraphNode(key, entry.id, kind, d, d, (), entry.display, zero_dot)
    if kind == FAMILY:
        d = generic_orbit_dimension(entry.pair)
        return GraphNode(key, entry.id, kind, d, d + len(entry.params), tuple(entry.params), f"{entry.display}*", zero_dot)
    free = tuple(s for s in symbols if any(s in a.indeterminates for a in args))
    pair = instantiate(entry, list(args), free)
    d = generic_orbit_dimension(pair)
    extra = jacobian_rank(args, free) if free else 0
    return GraphNode(key, entry.id, kind, d, d + extra, tuple(str(a) for a in args), key, zero_dot)


# assembly -----------------------------------------------------------------------


class _Nodes:
    def __init__(self, catalog: Catalog, variety: str) -> None:
        self.catalog = catalog
        self.variety = variety
        self.by_key: Dict[str, GraphNode] = {}
        for e in catalog.entries_of(variety):
            kind = FAMILY if e.params else RIGID
            key = f"{e.id}*" if e.params else e.id
            self.by_key[key] = _make_node(e, key, kind, (), ())

    def get(self, entry_id: str, args: Sequence[RatFun], symbols: Sequence[str]) -> str:
        entry = self.catalog.entry(self.variety, entry_id)
        key, kind = classify(entry, args, symbols)
        if key not in self.by_key:
            if kind == SUBFAMILY:
                free = [s for s in symbols if any(s in a.indeterminates for a in args)]
                args = _canonical(args, free)
                symbols = CANONICAL
            self.by_key[key] = _make_node(entry, key, kind, args, symbols)
        return key


def witness_endpoints(catalog: Catalog, row: WitnessRow, outcome: Optional[WitnessOutcome], nodes: "_Nodes") -> Tuple[str, str]:
    names = (T,) + tuple(row.symbols)
    rad = radical_bindings(row.radicals, names)
    sym = tuple(s for s in row.symbols if s not in rad)
    src = [a.substitute(rad) if rad else a for a in parse_args(row.source_args, names)]
    tgt = [a.substitute(rad) if rad else a for a in parse_args(row.target_args, names)]
    if outcome is not None and outcome.certificate is not None and outcome.certificate.solved:
        solved = {k: parse_ratfun(v, names) for k, v in outcome.certificate.solved}
        tgt = [a.substitute(solved) for a in tgt]
    return nodes.get(row.source, src, sym), nodes.get(row.target, tgt, sym)


def _nonedges(catalog: Catalog, row: NonDegenRow, cert: NonDegenCertificate, nodes: _Nodes) -> List[NonEdge]:
    entry = catalog.entry(row.variety, row.source)
    if row.family:
        source, scope = f"{entry.id}*", FAMILY
    elif not entry.params:
        source, scope = entry.id, RIGID
    else:
        args = parse_args(row.source_args, row.closed_set.params)
        key, kind = classify(entry, args, row.closed_set.params)
        source, scope = key, (MEMBER if kind in (FAMILY, SUBFAMILY) else kind)
    sound = not cert.membership and cert.invariance is not None
    out: List[NonEdge] = []
    specs = {s.id: s for s in row.targets}
    for check in cert.checks:
        spec = specs[check.target]
        values = {k: parse_ratfun(v) for k, v in check.sample}
        tentry = catalog.entry(row.variety, spec.id)
        names = tuple(values) + tuple(spec.symbols)
        targs = [a.substitute(values) for a in parse_args(spec.args, names)]
        keys = [classify(tentry, targs, ())[0]]
        if tentry.params:
            keys.append(f"{tentry.id}*")
        if scope == MEMBER and row.source_args:
            sargs = [a.substitute(values) for a in parse_args(row.source_args, row.closed_set.params)]
            if all(not a.indeterminates for a in sargs):
                source = classify(entry, sargs, ())[0]
        out.append(NonEdge(row.id, source, scope, spec.id, tuple(keys), check.sample, sound and check.disjoint))
    return out


def build_graph(
    catalog: Catalog,
    variety: str,
    outcomes: Optional[Mapping[str, WitnessOutcome]] = None,
    certificates: Optional[Mapping[str, NonDegenCertificate]] = None,
) -> DegenGraph:
    """Nodes, verified edges and certified non-edges of one variety.

    Without ``outcomes`` every witness row is checked here.  A witness whose
    source arguments involve ``t`` or cover the family's parameters starts
    at the family node; targets are placed the same way.
    """
    nodes = _Nodes(catalog, variety)
    edges: List[GraphEdge] = []
    for row in catalog.witnesses_of(variety):
        outcome = outcomes.get(row.id) if outcomes is not None else check_witness(catalog, row)
        if outcome is None or not outcome.verified:
            continue
        s, t = witness_endpoints(catalog, row, outcome, nodes)
        edges.append(GraphEdge(s, t, WITNESS, (row.id,)))
    nonedges: List[NonEdge] = []
    for row in catalog.nondegen_of(variety):
        cert = certificates.get(row.id) if certificates else None
        if cert is not None:
            nonedges.extend(_nonedges(catalog, row, cert, nodes))
    for n in list(nodes.by_key.values()):
        if n.kind in (MEMBER, SUBFAMILY) and f"{n.entry}*" in nodes.by_key:
            edges.append(GraphEdge(f"{n.entry}*", n.key, INCLUSION))
    if ZERO_ID in nodes.by_key:
        edges += [GraphEdge(k, ZERO_ID, ZERO) for k in nodes.by_key if k != ZERO_ID]
    return DegenGraph(variety, tuple(nodes.by_key.values()), tuple(edges), tuple(nonedges))


def transitive_closure(g: DegenGraph) -> DegenGraph:
    """Add an implied edge for every pair joined by a path; idempotent."""
    present = g.pairs()
    extra = []
    for n in g.nodes:
        for k in sorted(g.reachable(n.key)):
            if k != n.key and (n.key, k) not in present:
                extra.append(GraphEdge(n.key, k, IMPLIED))
    if not extra:
        return g
    return DegenGraph(g.variety, g.nodes, g.edges + tuple(extra), g.nonedges)


def consistency_conflicts(g: DegenGraph) -> List[Tuple[NonEdge, str]]:
    """Certified non-edges contradicted by a path of verified edges, with the reached node."""
    out = []
    for ne in g.nonedges:
        if not ne.certified or not g.has_node(ne.source):
            continue
        reach = g.reachable(ne.source)
        hit = next((k for k in ne.target_keys if k in reach), None)
        if hit is not None:
            out.append((ne, hit))
    return out


# figures ------------------------------------------------------------------------


def _figure_targets(catalog: Catalog, variety: str, key_args: Sequence[str], entry_id: str) -> Tuple[str, ...]:
    entry = catalog.entry(variety, entry_id)
    if not entry.params:
        return (entry.id,)
    names = tuple(dict.fromkeys(n for a in key_args for n in _NAME.findall(a)))
    args = parse_args(key_args, names)
    return (classify(entry, args, names)[0],)


def figure_graph(catalog: Catalog, figure: Figure, base: DegenGraph) -> DegenGraph:
    """The drawn figure; an edge is ``verified`` when the closure of ``base`` supports it."""
    closed = transitive_closure(base)
    reach = {n.key: closed.reachable(n.key) | {n.key} for n in closed.nodes}
    nodes: List[GraphNode] = []
    images: Dict[str, Tuple[str, ...]] = {}
    for fn in figure.nodes:
        entry = catalog.entry(figure.variety, fn.entry)
        kind = RIGID if not entry.params else (MEMBER if not any(_NAME.findall(a) for a in fn.args) else FAMILY)
        label = fn.label or (f"{entry.display}^{{{','.join(fn.args)}}}" if fn.args else entry.display)
        nodes.append(GraphNode(fn.key, fn.entry, kind, fn.level, fn.level, fn.args, label, entry.pair.product_is_zero(DOT)))
        images[fn.key] = _figure_targets(catalog, figure.variety, fn.args, fn.entry)
    by_key = {n.key: n for n in nodes}
    edges = []
    for fe in figure.edges:
        src = [k for k in images[fe.source] if k in reach]
        tgt_entry = by_key[fe.target].entry
        wanted = set(images[fe.target])
        if by_key[fe.target].kind == FAMILY:
            wanted |= set(base.members_of(tgt_entry))
        ok = any(reach[s] & wanted for s in src)
        edges.append(GraphEdge(fe.source, fe.target, DRAWN, (), fe.label, ok))
    return DegenGraph(figure.variety, tuple(nodes), tuple(edges))

import random

import pytest

from degenlab.geometry import (
    DegenGraph,
    DotOptions,
    GraphEdge,
    GraphNode,
    InconsistentClaim,
    emit_dot,
    figure_graph,
    irreducible_components,
    transitive_closure,
)

TLP = "transposed-leibniz-poisson"


def node(key, level=2, kind="rigid"):
    return GraphNode(key, key, kind, level, level)


def chain():
    nodes = (node("a", 4), node("b", 3), node("c", 2), node("d", 0))
    edges = (GraphEdge("a", "b", "witness"), GraphEdge("b", "c", "witness"), GraphEdge("c", "d", "zero"))
    return DegenGraph("toy", nodes, edges)


# transitive_closure -------------------------------------------------------------------


def test_figure_path_implies_edge(context):
    g = context.graph(TLP)
    assert ("T3", "T7^{0}") not in g.pairs()
    closed = transitive_closure(g)
    assert {("T3", "T6"), ("T6", "T7^{0}"), ("T3", "T7^{0}")} <= closed.pairs()


def test_edgeless_closure_is_itself():
    g = DegenGraph("toy", (node("a"), node("b")))
    assert transitive_closure(g) == g


def test_closure_idempotent(context):
    for v in ("leibniz-poisson", "novikov-poisson"):
        once = transitive_closure(context.graph(v))
        assert transitive_closure(once).pairs() == once.pairs()


def test_toy_closure():
    closed = transitive_closure(chain())
    assert closed.pairs() == {(s, t) for i, s in enumerate("abcd") for t in "abcd"[i + 1:]}
    assert sum(e.kind == "implied" for e in closed.edges) == 3


def test_novikov_n07_reaches_n01_two_ways(context):
    g = context.graph("novikov-poisson")
    assert ("N07*", "N01") in g.pairs()
    assert "N14*" in g.reachable("N07^{alpha,alpha}") and ("N14*", "N01") in g.pairs()
    assert ("N07*", "N01") in transitive_closure(g).pairs()


def test_unknown_endpoint_rejected():
    with pytest.raises(ValueError):
        DegenGraph("toy", (node("a"),), (GraphEdge("a", "b", "witness"),))


# irreducible_components ------------------------------------------------------------------


def test_leibniz_poisson_components(context, catalog):
    rep = irreducible_components(context.graph("leibniz-poisson"), catalog.claim("leibniz-poisson").claim)
    assert set(rep.components) == {"L3", "L4", "L5*", "L6*"}
    assert rep.consistent and rep.matches_claim


def test_single_node_graph():
    assert irreducible_components(DegenGraph("toy", (node("a"),))).components == ("a",)


def test_toy_components():
    assert irreducible_components(chain()).components == ("a",)


def test_bad_claim_raises():
    with pytest.raises(InconsistentClaim) as exc:
        irreducible_components(chain(), ("b",))
    assert {v.condition for v in exc.value.report.violations} == {"dominated", "not-covered"}
    rep = irreducible_components(chain(), ("zz",), strict=False)
    assert rep.violations[0].condition == "unknown-node"


def test_claims_are_antichains(context, catalog):
    found = set()
    for claim in catalog.components:
        closed = transitive_closure(context.graph(claim.variety)).pairs()
        found |= {(claim.variety, a, b) for a in claim.claim for b in claim.claim if a != b and (a, b) in closed}
    # verified witnesses into every member of C17 dominate that claimed family; see the decision ledger
    assert {(v, b) for v, _, b in found} == {("comm-pre-lie", "C17*")}
    assert {a for _, a, _ in found} == {"C10*", "C11", "C12*", "C13", "C14", "C15*"}


def test_components_independent_of_insertion_order(context, catalog):
    rng = random.Random(7)
    for v in catalog.variety_names():
        g = context.graph(v)
        expected = irreducible_components(g).components
        for _ in range(3):
            nodes, edges = list(g.nodes), list(g.edges)
            rng.shuffle(nodes)
            rng.shuffle(edges)
            h = DegenGraph(v, tuple(nodes), tuple(edges), g.nonedges)
            assert irreducible_components(h).components == expected
            assert transitive_closure(h).pairs() == transitive_closure(g).pairs()


def test_levels_monotone_along_closure(context, catalog):
    for v in catalog.variety_names():
        closed = transitive_closure(context.graph(v))
        for e in closed.edges:
            s, t = closed.node(e.source), closed.node(e.target)
            assert s.level >= t.level and s.dimension > t.dimension, (v, e)


# emit_dot ----------------------------------------------------------------------------


def test_figure_two_levels(context, catalog):
    fig = figure_graph(catalog, catalog.figure(TLP), context.graph(TLP))
    assert {n.level for n in fig.nodes} == {4, 3, 2, 0}
    assert len(fig.nodes) == 9
    assert all(e.verified for e in fig.edges)
    text = emit_dot(fig)
    algebra_nodes = [ln for ln in text.splitlines() if "shape=" in ln and "plaintext" not in ln]
    assert len(algebra_nodes) == 9
    assert "rank=same" in text


def test_empty_digraph():
    text = emit_dot(DegenGraph("empty"))
    assert text.startswith('digraph "empty" {') and text.endswith("}\n")
    assert "->" not in text


def test_dot_deterministic(context):
    g = context.graph("novikov-poisson")
    assert emit_dot(g) == emit_dot(g)
    shuffled = DegenGraph(g.variety, tuple(reversed(g.nodes)), tuple(reversed(g.edges)), g.nonedges)
    assert emit_dot(shuffled) == emit_dot(g)


def test_dot_shapes_and_implied_edges():
    g = DegenGraph("toy", (GraphNode("z", "z", "rigid", 2, 2, zero_dot=True), node("a", 3)), (GraphEdge("a", "z", "witness", label="x=0"),))
    text = emit_dot(transitive_closure(g), DotOptions(show_implied=True))
    assert '"z" [label="z", shape=ellipse];' in text
    assert '"a" [label="a", shape=box];' in text
    assert '"a" -> "z" [label="x=0"];' in text
    toy = transitive_closure(chain())
    assert emit_dot(toy).count("->") < emit_dot(toy, DotOptions(show_implied=True)).count("->")

import random

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.algebra import BasisMatrix, StructurePair, transform_pair
from degenlab.exact import Q
from degenlab.geometry import transitive_closure
from degenlab.invariants import (
    cheap_invariants,
    derivation_space,
    generic_orbit_dimension,
    orbit_dimension,
    verify_derivation,
)
from oracles.samples import concrete_instances
from oracles.sympy_oracles import derivation_dimension as oracle_derivation_dimension

L2 = StructurePair.from_tables(circ={"12": "e1"})
L3 = StructurePair.from_tables(circ={"12": "e2", "21": "-e2"})
L4 = StructurePair.from_tables({"11": "e1", "22": "e2"})
T7 = StructurePair.from_tables({"11": "e2"}, {"11": "alpha*e2"}, ("alpha",))


def entry(catalog, variety, id):
    return catalog.entry(variety, id).pair


# derivation_space ---------------------------------------------------------------


def test_zero_pair_has_full_derivation_algebra():
    assert derivation_space(StructurePair.zero()).dimension == 4


def test_l4_has_no_derivations():
    assert derivation_space(L4).dimension == 0
    assert orbit_dimension(L4) == 4


def test_t7_at_three():
    assert derivation_space(T7.substitute({"alpha": 3})).dimension == 2
    assert orbit_dimension(T7.substitute({"alpha": 3})) == 2


def test_symbolic_pair_rejected():
    with pytest.raises(ValueError):
        derivation_space(T7)


# orbit_dimension ------------------------------------------------------------------


def test_zero_pair_orbit_is_a_point():
    assert orbit_dimension(StructurePair.zero()) == 0


def test_l2_level():
    assert orbit_dimension(L2) == 3


def test_a05_level(catalog):
    assert orbit_dimension(entry(catalog, "anti-pre-lie-poisson", "A05")) == 4


def test_generic_orbit_dimension_of_family(catalog):
    assert generic_orbit_dimension(entry(catalog, "leibniz-poisson", "L5")) == 3
    assert generic_orbit_dimension(T7) == 2


# cheap_invariants -------------------------------------------------------------------


def test_p10_second_product_commutative(catalog):
    p10 = entry(catalog, "pre-poisson", "P10")
    inv = cheap_invariants(p10.substitute({n: Q(2) for n in p10.params.names}))
    assert inv.circ_commutative


def test_zero_product_rank():
    inv = cheap_invariants(StructurePair.zero())
    assert inv.dot_rank == 0 and inv.circ_rank == 0
    assert inv.annihilator_dimension == 2


def test_l3_bracket_anticommutative():
    inv = cheap_invariants(L3)
    assert inv.circ_anticommutative and not inv.circ_commutative
    assert inv.dot_nilpotent


def test_l4_invariants():
    inv = cheap_invariants(L4)
    assert inv.dot_commutative and inv.dot_rank == 2 and inv.square_dimension == 2
    assert not inv.dot_nilpotent


# properties ---------------------------------------------------------------------------


def test_derivation_bases_satisfy_the_leibniz_rule(catalog):
    for e, values, pair in concrete_instances(catalog):
        for d in derivation_space(pair).basis:
            assert verify_derivation(pair, d), (e.variety, e.id, values)


def test_non_derivation_rejected():
    assert not verify_derivation(L4, ((1, 0), (0, 0)))


def test_derivation_dimension_matches_sympy_oracle(catalog):
    for e, values, pair in concrete_instances(catalog, count=3):
        assert derivation_space(pair).dimension == oracle_derivation_dimension(pair), (e.variety, e.id, values)


_small = st.integers(-3, 3)


@settings(max_examples=20, deadline=None)
@given(m=st.tuples(_small, _small, _small, _small).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0), seed=st.integers(0, 10**6))
def test_orbit_dimension_invariant_under_basis_change(catalog, m, seed):
    rng = random.Random(seed)
    for e, _, pair in rng.sample(list(concrete_instances(catalog)), 6):
        g = BasisMatrix.of([[Q(m[0]), Q(m[1])], [Q(m[2]), Q(m[3])]])
        assert orbit_dimension(transform_pair(pair, g)) == orbit_dimension(pair), (e.variety, e.id)


def test_proper_edges_increase_derivation_dimension(context, catalog):
    for v in catalog.variety_names():
        g = context.graph(v)
        for edge in g.edges:
            s, t = g.node(edge.source), g.node(edge.target)
            if "family" not in (s.kind, t.kind):
                assert s.level > t.level, (v, edge)
        for edge in transitive_closure(g).edges:
            assert g.node(edge.source).dimension > g.node(edge.target).dimension, (v, edge)

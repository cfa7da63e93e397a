import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.algebra import BasisMatrix, ClosedSetSpec, StructurePair, transform_pair
from degenlab.algebra.structure import COORDINATES
from degenlab.exact import Poly, Q, parse_poly
from degenlab.solver import (
    IMPLEMENTATION,
    Limits,
    PolySystem,
    ResourceLimit,
    are_isomorphic,
    buchberger,
    groebner,
    is_empty_over_C,
    orbit_meets_set,
    orbit_system,
)
from oracles.samples import concrete_instances
from oracles.sympy_oracles import grid_has_solution, random_system, sympy_groebner_is_unit

X, Y = Poly.var("x"), Poly.var("y")
L1 = StructurePair.from_tables(circ={"11": "e2"})
L2 = StructurePair.from_tables(circ={"12": "e1"})
L4 = StructurePair.from_tables({"11": "e1", "22": "e2"})
R_L4 = ClosedSetSpec.parse(("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"), ("c12_2 = c21_2",))
GRID = (Q(-1), Q(0), Q(1), Q(2))


def system(texts, names=("x", "y"), ineqs=()):
    return PolySystem(names, [parse_poly(t, names) for t in texts], [parse_poly(t, names) for t in ineqs])


# buchberger ---------------------------------------------------------------------


def test_redundant_generator_dropped():
    g = buchberger(system(["x^2 - 1", "x - 1"], ("x",)))
    assert g.polys == (X - 1,)


def test_inconsistent_system_gives_unit():
    g = buchberger(system(["x*y - 1", "x"]))
    assert g.is_unit() and g.polys == (Poly.const(1),)


def test_determinant_system_has_solutions():
    names = ("g11", "g12", "g21", "g22")
    sys = system(["g11*g22 - g12*g21 - 1", "g11 - 2"], names)
    g = buchberger(sys)
    assert not g.is_unit()
    for g12, g21 in ((Q(0), Q(0)), (Q(1), Q(3)), (Q(-2), Q(5, 7))):
        point = {"g11": Q(2), "g12": g12, "g21": g21, "g22": (1 + g12 * g21) / 2}
        assert all(p.evaluate(point) == 0 for p in g.polys)


def test_basis_is_monic_and_order_tagged():
    g = buchberger(system(["2*x^2*y - y", "3*x*y^2 - x"]))
    assert g.order == "grevlex"
    for p in g.polys:
        assert p.leading_term()[1] == 1


def test_resource_limit_raised():
    sys = system(["x^3 - y^2 + x*y", "x^2*y - y^3 + 1", "x*y^2 - x^2 + y"])
    with pytest.raises(ResourceLimit):
        buchberger(sys, Limits(max_pairs=1))


def test_reserved_variable_rejected():
    with pytest.raises(ValueError):
        PolySystem(("_z",), [])
    with pytest.raises(ValueError):
        PolySystem(("x",), [Y])


# is_empty_over_C --------------------------------------------------------------------


def test_contradictory_linear_system_empty():
    assert is_empty_over_C(system(["x", "x - 1"], ("x",)))


def test_imaginary_unit_is_a_solution():
    assert not is_empty_over_C(system(["x^2 + 1"], ("x",)))


def test_inequation_excludes_only_solution():
    assert is_empty_over_C(system(["x^2 - 2*x + 1"], ("x",), ineqs=["x - 1"]))
    assert not is_empty_over_C(system(["x^2 - 1"], ("x",), ineqs=["x - 1"]))


def test_l1_cannot_be_moved_into_r_l4():
    assert is_empty_over_C(orbit_system(L1, R_L4))


# are_isomorphic -----------------------------------------------------------------------


def test_identity_isomorphism(catalog):
    a = catalog.entry("leibniz-poisson", "L4").pair
    assert are_isomorphic(a, a)


def test_n07_parameters_swap(catalog):
    n07 = catalog.entry("novikov-poisson", "N07").pair
    a = n07.substitute({"alpha": 2, "beta": 3})
    b = n07.substitute({"alpha": 3, "beta": 2})
    assert are_isomorphic(a, b)
    assert are_isomorphic(a, b, prefilter=False)


def test_l1_not_isomorphic_to_l2():
    assert not are_isomorphic(L1, L2)
    assert not are_isomorphic(L1, L2, prefilter=False)


def test_symbolic_input_rejected(catalog):
    with pytest.raises(ValueError):
        are_isomorphic(catalog.entry("leibniz-poisson", "L5").pair, L1)


# orbit_meets_set ----------------------------------------------------------------------


def test_origin_lies_in_every_set():
    for c in (R_L4, ClosedSetSpec(()), ClosedSetSpec.parse(("c11_1",), ("c11_1 = 0",))):
        assert orbit_meets_set(StructurePair.zero(), c)


def test_l1_vs_r_l4():
    assert not orbit_meets_set(L1, R_L4)
    assert orbit_meets_set(L4, R_L4)


def test_t1_misses_r_t5_family(catalog):
    row = next(r for r in catalog.nondegen_of("transposed-leibniz-poisson") if r.source == "T5" and r.family)
    t1 = catalog.entry("transposed-leibniz-poisson", "T1").pair
    assert not orbit_meets_set(t1, row.closed_set)


def test_whole_space_meets_everything():
    assert orbit_meets_set(L1, ClosedSetSpec.whole_space())


# properties -----------------------------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_inputs_reduce_to_zero_modulo_basis(seed):
    rng = random.Random(seed)
    names, eqs, _, _ = random_system(rng, rng.randint(1, 3), GRID)
    if not eqs:
        return
    g = groebner(eqs, names)
    for p in eqs:
        assert g.contains(p)


def test_emptiness_agrees_with_grid_search_and_sympy():
    rng = random.Random(20240101)
    planted = 0
    for _ in range(50):
        names, eqs, ineqs, point = random_system(rng, rng.randint(1, 3), GRID)
        found = grid_has_solution(eqs, ineqs, names, GRID)
        empty = is_empty_over_C(PolySystem(names, eqs, ineqs))
        if found is not None:
            assert not empty, (eqs, ineqs, found)
        if point is not None:
            planted += 1
            assert found is not None
        assert empty == sympy_groebner_is_unit(eqs, ineqs, names), (eqs, ineqs)
    assert planted >= 10


def _random_matrix(rng):
    while True:
        m = [[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)]
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return BasisMatrix.of(m)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_isomorphism_is_an_equivalence_relation(catalog, seed):
    rng = random.Random(seed)
    variety = rng.choice(("leibniz-poisson", "transposed-leibniz-poisson", "novikov-poisson"))
    pool = [p for e, _, p in concrete_instances(catalog) if e.variety == variety]
    a, b = rng.choice(pool), rng.choice(pool)
    a2 = transform_pair(a, _random_matrix(rng))
    a3 = transform_pair(a2, _random_matrix(rng))
    assert are_isomorphic(a, a)
    assert are_isomorphic(a, a2) and are_isomorphic(a2, a)
    assert are_isomorphic(a2, a3) and are_isomorphic(a, a3)
    assert are_isomorphic(a, b) == are_isomorphic(b, a)
    assert are_isomorphic(a, b) == are_isomorphic(a3, b)


def test_kernel_implementation_reported():
    assert IMPLEMENTATION in ("python", "cython")


def test_closed_set_rejects_unknown_coordinate():
    with pytest.raises(ValueError):
        ClosedSetSpec(("c33_1",))
    assert len(COORDINATES) == 16

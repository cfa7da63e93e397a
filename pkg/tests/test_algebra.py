import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.algebra import (
    COORDINATES,
    DOT,
    CIRC,
    BasisMatrix,
    ParamSpec,
    SingularBasis,
    StructurePair,
    VarietyIdentity,
    change_basis,
    check_variety,
    expand_identity,
    flat_index,
    transform_pair,
    variety,
)
from degenlab.algebra.varieties import ASSOCIATIVE, JACOBI, LEIBNIZ
from degenlab.exact import Poly, Q, RatFun, parse_ratfun

LP = variety("leibniz-poisson")
L4 = StructurePair.from_tables({"11": "e1", "22": "e2"})
L1 = StructurePair.from_tables(circ={"11": "e2"})
L5 = StructurePair.from_tables({"11": "e1", "12": "e2"}, {"21": "alpha*e2"}, ("alpha",), complete_dot=True)


def rows(text_rows, names=("t",)):
    return BasisMatrix.of([[parse_ratfun(x, names) for x in r] for r in text_rows])


# expand_identity --------------------------------------------------------------


def test_lp_compatibility_on_l4():
    law = LP.compat_laws[0]
    assert expand_identity(L4, law, (0, 0, 0)) == (Poly.const(0), Poly.const(0))


def test_zero_pair_satisfies_everything():
    zero = StructurePair.zero()
    for name in ("leibniz-poisson", "novikov-poisson", "pre-poisson", "anti-pre-lie-poisson"):
        for law in variety(name).laws:
            for args in itertools.product(range(2), repeat=law.arity):
                assert expand_identity(zero, law, args) == (Poly.const(0), Poly.const(0))


def _sympy_assoc_defect(table, i, j, k):
    """Independent oracle: (e_i e_j) e_k - e_i (e_j e_k) with vectors as sympy matrices."""

    def mul(u, v):
        out = sympy.zeros(1, 2)
        for p in range(2):
            for q in range(2):
                out += u[p] * v[q] * sympy.Matrix([table[(p, q)]])
        return out

    e = [sympy.Matrix([[1, 0]]), sympy.Matrix([[0, 1]])]
    return mul(mul(e[i], e[j]), e[k]) - mul(e[i], mul(e[j], e[k]))


def test_associativity_defect_matches_oracle():
    pair = StructurePair.from_tables({"11": "e2", "22": "e1"})
    table = {(0, 0): [0, 1], (1, 1): [1, 0], (0, 1): [0, 0], (1, 0): [0, 0]}
    law = VarietyIdentity.parse(ASSOCIATIVE)
    # at (e1, e1, e1) both sides are zero; the defect shows at (e1, e1, e2)
    assert expand_identity(pair, law, (0, 0, 0)) == (Poly.const(0), Poly.const(0))
    assert expand_identity(pair, law, (0, 0, 1)) != (Poly.const(0), Poly.const(0))
    for args in itertools.product(range(2), repeat=3):
        got = expand_identity(pair, law, args)
        want = _sympy_assoc_defect(table, *args)
        assert [g.constant_value() if not g.is_zero() else 0 for g in got] == [int(x) for x in want]


def test_identity_arity_checked():
    with pytest.raises(ValueError):
        expand_identity(L4, LP.compat_laws[0], (0, 0))


# check_variety ----------------------------------------------------------------


def test_l5_family_symbolic_pass():
    assert check_variety(L5, LP).passed


def test_zero_pair_in_every_variety():
    from degenlab.algebra import BUILTIN_VARIETIES

    for v in BUILTIN_VARIETIES.values():
        assert check_variety(StructurePair.zero(), v).passed


def test_perturbed_l5_fails_with_residual():
    bad = StructurePair.from_tables({"11": "e1", "12": "e2"}, {"21": "alpha*e2 + e1"}, ("alpha",), complete_dot=True)
    rep = check_variety(bad, LP)
    assert not rep.passed
    v = rep.violations[0]
    assert any(not r.is_zero() for r in v.residual)


# change_basis -----------------------------------------------------------------


def test_l4_towards_l5_zero():
    got = change_basis(L4, rows([["1", "1"], ["0", "t"]]))
    t = RatFun.var("t")
    # E1E1 = E1, E1E2 = E2, E2E2 = t E2
    assert got[flat_index(0, 0, 0)] == 1 and got[flat_index(0, 0, 1)] == 0
    assert got[flat_index(0, 1, 1)] == 1 and got[flat_index(1, 0, 1)] == 1
    assert got[flat_index(1, 1, 1)] == t and got[flat_index(1, 1, 0)] == 0
    assert all(c.is_zero() for c in got[8:])


def test_identity_matrix_is_neutral():
    got = change_basis(L5, BasisMatrix.identity())
    assert [RatFun(p) for p in L5.constants()] == list(got)


def test_nilpotent_scaling():
    got = change_basis(L1, rows([["t", "0"], ["0", "t^2"]]))
    assert got[8 + flat_index(0, 0, 1)] == 1
    assert sum(1 for c in got if not c.is_zero()) == 1


def test_singular_basis():
    with pytest.raises(SingularBasis):
        change_basis(L4, rows([["1", "t"], ["2", "2*t"]]))


# properties -------------------------------------------------------------------

small = st.integers(-3, 3).map(Q)
matrices = st.tuples(small, small, small, small).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)
consts = st.lists(st.integers(-2, 2), min_size=16, max_size=16)


def _m(m):
    return BasisMatrix.of([[m[0], m[1]], [m[2], m[3]]])


@settings(max_examples=40, deadline=None)
@given(consts, matrices, matrices)
def test_change_basis_is_right_action(cs, a, b):
    pair = StructurePair.from_constants([Q(c) for c in cs])
    step = change_basis(change_basis(pair, _m(a)), _m(b))
    once = change_basis(pair, _m(b) @ _m(a))
    assert list(step) == list(once)


@settings(max_examples=25, deadline=None)
@given(matrices, st.sampled_from(["leibniz-poisson", "transposed-leibniz-poisson", "comm-pre-lie", "novikov-poisson"]))
def test_check_variety_is_basis_invariant(m, name):
    from degenlab.catalog import builtin_catalog

    cat = builtin_catalog()
    v = cat.variety(name)
    for e in cat.entries_of(name):
        if e.params:
            continue
        moved = transform_pair(e.pair, _m(m))
        assert check_variety(moved, v).passed


def test_anticommutative_implies_jacobi_symbolically():
    # generic anticommutative bracket: c'_12^k = -c'_21^k free, c'_ii^k = 0
    a, b = Poly.var("a"), Poly.var("b")
    zero = Poly.const(0)
    circ = [zero] * 8
    circ[flat_index(0, 1, 0)], circ[flat_index(0, 1, 1)] = a, b
    circ[flat_index(1, 0, 0)], circ[flat_index(1, 0, 1)] = -a, -b
    pair = StructurePair((zero,) * 8, tuple(circ), ParamSpec(("a", "b")))
    law = VarietyIdentity.parse(JACOBI)
    for args in itertools.product(range(2), repeat=3):
        assert expand_identity(pair, law, args) == (zero, zero)
    # and Jacobi makes the bracket a (left) Leibniz bracket as well
    assert all(r.is_zero() for args in itertools.product(range(2), repeat=3) for r in expand_identity(pair, VarietyIdentity.parse(LEIBNIZ), args))


def test_coordinate_names():
    assert len(COORDINATES) == 16
    assert COORDINATES[0] == "c11_1" and COORDINATES[8] == "cp11_1"
    assert DOT == 0 and CIRC == 1

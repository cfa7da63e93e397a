import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.exact import Q
from degenlab.solver import _pykernel as py
from degenlab.solver.groebner import MonomialOrder

cy = pytest.importorskip("degenlab.solver._ckernel", reason="compiled kernel not built")

NVARS = 3
mono = st.tuples(*[st.integers(0, 3)] * NVARS)
coeff = st.builds(Q, st.integers(-5, 5).filter(bool), st.integers(1, 4))
poly = st.dictionaries(mono, coeff, max_size=6)
ORDER = MonomialOrder(NVARS)


def reducer(terms):
    lead = ORDER.leading(terms)
    inv = 1 / terms[lead]
    return lead, {m: c * inv for m, c in terms.items() if m != lead}


def test_implementations_named():
    assert py.IMPLEMENTATION == "python" and cy.IMPLEMENTATION == "cython"


@given(mono, mono)
def test_monomial_operations_agree(a, b):
    for name in ("mono_mul", "mono_divides", "mono_lcm", "mono_coprime"):
        assert getattr(py, name)(a, b) == getattr(cy, name)(a, b)


@given(poly, mono, coeff)
def test_mul_term_agrees(terms, shift, c):
    assert py.mul_term(terms, shift, c) == cy.mul_term(terms, shift, c)


@settings(max_examples=150, deadline=None)
@given(poly, st.lists(poly.filter(bool), max_size=3), st.booleans())
def test_normal_form_agrees(terms, gens, full):
    reducers = [reducer(g) for g in gens]
    assert py.normal_form(terms, reducers, ORDER.negkey, full) == cy.normal_form(terms, reducers, ORDER.negkey, full)


def test_pure_python_switch_gives_same_basis():
    code = (
        "from degenlab.exact import parse_poly; from degenlab.solver import groebner, IMPLEMENTATION;"
        "ps=[parse_poly(s, ('x','y','z')) for s in ('x^2*y - z^3 + 1', 'x*y*z - 2*x + y', 'y^3 - x*z')];"
        "print(IMPLEMENTATION); print([str(p) for p in groebner(ps, ('x','y','z')).polys])"
    )
    outs = {}
    for flag in ("1", ""):
        env = dict(os.environ, DEGENLAB_PURE_PYTHON=flag)
        proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        impl, basis = proc.stdout.splitlines()
        outs[impl] = basis
    assert set(outs) == {"python", "cython"}
    assert outs["python"] == outs["cython"]

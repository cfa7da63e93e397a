from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenlab.exact import (
    ExprSyntaxError,
    PoleAtZero,
    Poly,
    Q,
    RatFun,
    Scalar,
    format_number,
    limit_at_zero,
    parse_number,
    parse_poly,
    parse_ratfun,
    substitute,
)

NAMES = ("t", "alpha", "beta")


def P(text):
    return parse_poly(text, NAMES + ("x",))


def R(text):
    return parse_ratfun(text, NAMES + ("x",))


# substitute -------------------------------------------------------------------


def test_substitute_evaluation_homomorphism():
    assert substitute(P("alpha*t + beta"), {"alpha": 2, "beta": 3}) == P("2*t + 3")


def test_substitute_rational_binding_lifts_to_ratfun():
    out = substitute(P("alpha*x"), {"alpha": R("1/t")})
    assert isinstance(out, RatFun)
    assert out == R("x/t")


def test_substitute_derived_value():
    # oracle: (2 - 1) * 2^3
    assert substitute(P("(t - 1)*t^3"), {"t": 2}) == Poly.const(8)


def test_substitute_ignores_absent_names():
    p = P("alpha + 1")
    assert substitute(p, {"gamma": 5}) == p


def test_ratfun_substitution_with_nonconstant_denominators():
    r = R("alpha/(beta + 1)")
    out = r.substitute({"alpha": R("t/(t + 2)"), "beta": R("1/t")})
    assert out == R("t^2/((t + 2)*(t + 1))")


# limit_at_zero ----------------------------------------------------------------


def test_limit_simplifies():
    assert limit_at_zero(R("(t^2 + t)/t")) == 1


def test_limit_positive_powers_vanish_after_substitution():
    r = R("t^2*(alpha - beta)").substitute({"alpha": 5, "beta": 3})
    assert limit_at_zero(r) == 0


def test_limit_pole():
    with pytest.raises(PoleAtZero):
        limit_at_zero(R("1/t"))


def test_limit_rejects_other_indeterminates():
    with pytest.raises(ValueError):
        limit_at_zero(R("alpha*t"))


def test_generic_limit_keeps_parameters():
    assert R("(alpha*t + t^2)/(t*(beta + t))").generic_limit("t") == R("alpha/beta")


# Scalar -----------------------------------------------------------------------


def test_scalar_normal_form_and_equality():
    z = Scalar(Fraction(2, 4), Fraction(-3, 6))
    assert z == Scalar(Q(1, 2), Q(-1, 2))
    assert z.re.denominator > 0 and z.im.denominator > 0
    assert Scalar(0, 1) * Scalar(0, 1) == -1


@pytest.mark.parametrize("text", ["3", "-7/2", "1/2+3/4*i", "-i", "5/3*i", "2-i"])
def test_number_syntax_round_trip(text):
    x = parse_number(text)
    assert parse_number(format_number(x)) == x


def test_expression_errors_report_column():
    with pytest.raises(ExprSyntaxError) as info:
        parse_poly("alpha +* 2", NAMES)
    assert info.value.column > 0


def test_undeclared_name_rejected():
    with pytest.raises(ExprSyntaxError):
        parse_poly("gamma + 1", NAMES)


def test_poly_canonical_representation():
    assert P("alpha*t + t*alpha") == P("2*alpha*t")
    assert P("x - x").is_zero()
    assert str(P("t^2 - 2*t + 1")) == str(P("(t - 1)^2"))


# properties -------------------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, coeffs, max_size=4).map(lambda d: Poly.from_exponents(NAMES, {m: Q(c) for m, c in d.items()}))
values = st.fractions(min_value=-4, max_value=4, max_denominator=3).map(Q)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Poly.const(0)


@settings(max_examples=60, deadline=None)
@given(polys, polys, values, values)
def test_substitute_is_homomorphism(a, b, x, y):
    env = {"alpha": x, "beta": y}
    assert substitute(a + b, env) == substitute(a, env) + substitute(b, env)
    assert substitute(a * b, env) == substitute(a, env) * substitute(b, env)


@settings(max_examples=60, deadline=None)
@given(polys, polys, values, values)
def test_limit_times_t_vanishes(num, den, x, y):
    env = {"alpha": x, "beta": y}
    num, den = substitute(num, env), substitute(den, env)
    if den.is_zero():
        return
    r = RatFun(num, den)
    try:
        limit_at_zero(r)
    except PoleAtZero:
        return
    assert limit_at_zero(r * Poly.var("t")) == 0


@settings(max_examples=60, deadline=None)
@given(polys, polys, values, values)
def test_substitute_then_limit_commutes(num, den, x, y):
    if den.is_zero():
        return
    env = {"alpha": x, "beta": y}
    r = RatFun(num, den)
    try:
        sub = r.substitute(env)
        direct = limit_at_zero(sub)
    except (PoleAtZero, ZeroDivisionError):
        return
    try:
        generic = r.generic_limit("t")
    except PoleAtZero:
        return
    # the generic limit is valid where its lowest denominator coefficient survives the substitution
    if r.limit_denominator("t").substitute(env).is_zero():
        return
    assert generic.substitute(env).constant_value() == direct


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_ratfun_field_operations(a, b):
    if b.is_zero():
        return
    r = RatFun(a, b)
    assert r * RatFun(b) == RatFun(a)
    if not a.is_zero():
        assert r * r.inverse() == 1

"""Rational functions with Laurent-style limits at ``t = 0``."""

from __future__ import annotations

import re
from typing import Mapping

from .poly import Poly, mono_gcd
from .scalar import is_number


_SIMPLE_ATOM = re.compile(r"[A-Za-z_]\w*(\^\d+)?|\d+")


class PoleAtZero(ArithmeticError):
    """The limit at zero does not exist: the denominator vanishes to higher order."""


class RatFun:
    """Quotient ``num / den`` of polynomials, normalised without a full gcd.

    Normalisation removes the common monomial factor, clears scalar content
    so that the denominator's leading coefficient is one, and cancels when the
    denominator divides the numerator exactly.  Equality is decided by
    cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None) -> None:
        num = _to_poly(num)
        den = Poly.const(1) if den is None else _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFun with zero denominator")
        num, den = _normalise(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def coerce(cls, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return cls(x)

    @classmethod
    def var(cls, name: str) -> "RatFun":
        return cls(Poly.var(name))

    # inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_poly(self) -> Poly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(1 / self.den.constant_value())

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    @property
    def indeterminates(self):
        return tuple(sorted(set(self.num.indeterminates) | set(self.den.indeterminates)))

    # arithmetic -------------------------------------------------------------
    def __neg__(self):
        return RatFun._make(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num - other.num, self.den)
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFun(Poly.const(0))
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero RatFun")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num**n, self.den**n)

    # evaluation -------------------------------------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> "RatFun":
        """Substitute numbers, polynomials or rational functions for names."""
        names = set(self.indeterminates)
        relevant = {n: RatFun.coerce(v) for n, v in bindings.items() if n in names}
        if not relevant:
            return self
        out = self
        for name, value in relevant.items():
            out = _substitute_one(out.num, name, value) / _substitute_one(out.den, name, value)
        return out

    def evaluate(self, bindings: Mapping[str, object]):
        r = self.substitute(bindings)
        if not r.is_constant():
            raise ValueError(f"unbound indeterminates: {list(r.indeterminates)}")
        return r.constant_value()

    def valuation(self, name: str) -> int:
        """Order of vanishing in ``name`` (negative for a pole)."""
        if self.num.is_zero():
            raise ValueError("valuation of zero is undefined")
        return self.num.min_degree(name) - self.den.min_degree(name)

    def generic_limit(self, name: str = "t") -> "RatFun":
        """Limit as ``name -> 0`` with the remaining indeterminates generic.

        The result is correct wherever the lowest-order denominator
        coefficient does not vanish.
        """
        if self.num.is_zero():
            return RatFun(Poly.const(0))
        a = self.num.min_degree(name)
        b = self.den.min_degree(name)
        if a > b:
            return RatFun(Poly.const(0))
        if a < b:
            raise PoleAtZero(f"{self} has a pole of order {b - a} at {name}=0")
        n0 = self.num.coefficients_in(name)[a]
        d0 = self.den.coefficients_in(name)[b]
        return RatFun(n0, d0)

    def derivative(self, name: str) -> "RatFun":
        """Partial derivative by the quotient rule."""
        num = self.num.derivative(name) * self.den - self.num * self.den.derivative(name)
        return RatFun(num, self.den * self.den)

    def limit_denominator(self, name: str = "t") -> Poly:
        """Lowest-order coefficient of the denominator in ``name``."""
        b = self.den.min_degree(name)
        return self.den.coefficients_in(name)[b]

    # comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if self.den == Poly.const(1):
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if not _SIMPLE_ATOM.fullmatch(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFun({str(self)!r})"

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFun":
        r = cls.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r


def _to_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return Poly.var(x)
    if is_number(x):
        return Poly.const(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce_or_none(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly) or is_number(x):
        return RatFun(x)
    return None


def _normalise(num: Poly, den: Poly):
    if num.is_zero():
        return Poly.const(0), Poly.const(1)
    g = mono_gcd(num.content_monomial(), den.content_monomial())
    if g:
        num = num.divide_monomial(g)
        den = den.divide_monomial(g)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), Poly.const(1)
    if len(den) <= len(num) or len(den) == 1:
        q = num.exact_divide(den) if len(den) > 1 else None
        if q is not None:
            return q, Poly.const(1)
    _, lc = den.leading_term()
    if lc != 1:
        inv = 1 / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _substitute_one(p: Poly, name: str, value: RatFun) -> RatFun:
    """Substitute ``value`` for ``name`` in a polynomial."""
    coeffs = p.coefficients_in(name)
    if set(coeffs) == {0}:
        return RatFun(p)
    top = max(coeffs)
    a, b = value.num, value.den
    total = Poly.const(0)
    a_pow = [Poly.const(1)]
    b_pow = [Poly.const(1)]
    for _ in range(top):
        a_pow.append(a_pow[-1] * a)
        b_pow.append(b_pow[-1] * b)
    for k, q in coeffs.items():
        total = total + q * a_pow[k] * b_pow[top - k]
    return RatFun(total, b_pow[top])


def limit_at_zero(r, name: str = "t"):
    """Limit of a univariate rational function as ``name -> 0``.

    Returns a coefficient (``Q`` or :class:`Scalar`).  Raises
    :class:`PoleAtZero` when the limit does not exist.
    """
    r = RatFun.coerce(r)
    extra = [n for n in r.indeterminates if n != name]
    if extra:
        raise ValueError(f"limit_at_zero expects a function of {name} only; found {extra}")
    return r.generic_limit(name).constant_value()


def substitute(p, bindings: Mapping[str, object]):
    """Evaluation homomorphism on polynomials and rational functions.

    Polynomial inputs with numeric or polynomial bindings stay polynomials;
    any rational binding lifts the result to :class:`RatFun`.
    """
    if isinstance(p, Poly) and all(isinstance(v, Poly) or is_number(v) for v in bindings.values()):
        return p.substitute(bindings)
    return RatFun.coerce(p).substitute(bindings)


ZERO = RatFun(Poly.const(0))
ONE = RatFun(Poly.const(1))

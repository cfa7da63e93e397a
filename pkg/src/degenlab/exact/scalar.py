"""Gaussian rationals: exact elements of Q(i).

Coefficients inside polynomials are kept as plain rationals whenever the
imaginary part vanishes; :class:`Scalar` is only materialised for genuinely
complex values.  :func:`number` performs that normalisation and is the single
entry point used by the polynomial code.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

try:  # gmpy2 rationals are an order of magnitude faster than Fraction
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction  # type: ignore[misc,assignment]

RATIONAL_TYPES: tuple = (int, Fraction, type(Q(0)))


class Scalar:
    """An element ``re + im*i`` of the Gaussian rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re: object = 0, im: object = 0) -> None:
        if isinstance(re, Scalar):
            re, im = re.re, re.im + Q(im)
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Scalar is immutable")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``a/b``, ``a/b*i``, ``a/b+c/d*i`` (and the bare ``i``)."""
        return cls(parse_number(text))

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re + other.re, self.im + other.im)
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re - other.re, self.im - other.im)
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inverse()
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Scalar(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Scalar(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, RATIONAL_TYPES):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"Scalar({format_number(self)!r})"

    def __str__(self) -> str:
        return format_number(self)


Number = Union[int, Fraction, Scalar, object]


def number(x) -> object:
    """Normalise ``x`` to the internal coefficient domain.

    Real values become :data:`Q` rationals; complex values stay :class:`Scalar`.
    """
    if isinstance(x, Scalar):
        return x.re if x.im == 0 else x
    if isinstance(x, str):
        return number(parse_number(x))
    if isinstance(x, float):
        raise TypeError("floating-point values are not exact")
    return Q(x)


def as_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def is_number(x) -> bool:
    return isinstance(x, (Scalar,) + RATIONAL_TYPES)


def _format_rational(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_number(x) -> str:
    """Render a coefficient in the catalog syntax ``a/b+c/d*i``."""
    if isinstance(x, Scalar):
        if x.im == 0:
            return _format_rational(x.re)
        im = _format_rational(x.im)
        im_part = "i" if x.im == 1 else ("-i" if x.im == -1 else f"{im}*i")
        if x.re == 0:
            return im_part
        sign = "" if im_part.startswith("-") else "+"
        return f"{_format_rational(x.re)}{sign}{im_part}"
    return _format_rational(x)


_RAT = r"[+-]?\d+(?:/\d+)?"
_NUMBER_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?P<im>[+-]\d+(?:/\d+)?\*i|[+-]i)?"
    rf"|(?P<imonly>{_RAT}\*i|[+-]?i))\s*$"
)


def parse_number(text: str) -> object:
    """Parse a literal of the form ``a/b``, ``a/b+c/d*i``, ``c/d*i`` or ``i``."""
    m = _NUMBER_RE.match(text)
    if not m:
        raise ValueError(f"not a Gaussian rational literal: {text!r}")

    def imag(part: str):
        part = part.replace("*i", "").replace("i", "")
        if part in ("", "+"):
            return Q(1)
        if part == "-":
            return Q(-1)
        return Q(Fraction(part))

    if m.group("imonly") is not None:
        return number(Scalar(0, imag(m.group("imonly"))))
    re_part = Q(Fraction(m.group("re")))
    if m.group("im"):
        return number(Scalar(re_part, imag(m.group("im"))))
    return re_part

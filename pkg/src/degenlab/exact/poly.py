"""Sparse multivariate polynomials over Q(i).

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, so every
polynomial has a unique representation regardless of how it was built.
Terms are ordered by graded reverse lexicographic order (variables ordered by
name) whenever an ordering is needed.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .scalar import Q, Scalar, format_number, is_number, number

Monomial = Tuple[Tuple[str, int], ...]

ONE_MONOMIAL: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        na, ea = a[i]
        nb, eb = b[j]
        if na == nb:
            out.append((na, ea + eb))
            i += 1
            j += 1
        elif na < nb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    db = dict(b)
    return all(db.get(n, 0) >= e for n, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """``b / a`` assuming divisibility."""
    da = dict(a)
    out = []
    for n, e in b:
        r = e - da.get(n, 0)
        if r:
            out.append((n, r))
    return tuple(out)


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    db = dict(b)
    out = []
    for n, e in a:
        m = min(e, db.get(n, 0))
        if m:
            out.append((n, m))
    return tuple(out)


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def grevlex_key(m: Monomial, names: Sequence[str]) -> tuple:
    """Sort key: larger key means larger monomial in grevlex over ``names``."""
    d = dict(m)
    exps = [d.get(n, 0) for n in names]
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class Poly:
    """Immutable polynomial with Gaussian-rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None) -> None:
        clean: Dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                c = number(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, object]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        c = number(c)
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._raw({((name, 1),): Q(1)})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, str):
            return cls.var(x)
        return cls.const(x)

    @classmethod
    def from_exponents(cls, names: Sequence[str], terms: Mapping[Sequence[int], object]) -> "Poly":
        out = {}
        for exps, c in terms.items():
            m = tuple(sorted((n, e) for n, e in zip(names, exps) if e))
            out[m] = c
        return cls(out)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def indeterminates(self) -> Tuple[str, ...]:
        names = set()
        for m in self._terms:
            for n, _ in m:
                names.add(n)
        return tuple(sorted(names))

    def exponent_terms(self, names: Sequence[str] | None = None) -> Dict[Tuple[int, ...], object]:
        """Terms keyed by dense exponent vectors over ``names``."""
        names = tuple(names) if names is not None else self.indeterminates
        out = {}
        idx = {n: i for i, n in enumerate(names)}
        for m, c in self._terms.items():
            e = [0] * len(names)
            for n, k in m:
                if n not in idx:
                    raise ValueError(f"indeterminate {n!r} not in {names}")
                e[idx[n]] = k
            out[tuple(e)] = c
        return out

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_value(self):
        """Coefficient of the constant monomial."""
        return self._terms.get(ONE_MONOMIAL, Q(0))

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def degree(self, name: str) -> int:
        best = -1 if not self._terms else 0
        for m in self._terms:
            for n, e in m:
                if n == name and e > best:
                    best = e
        return best

    def min_degree(self, name: str) -> int:
        """Smallest exponent of ``name`` across the terms (0 for the zero poly)."""
        if not self._terms:
            return 0
        return min(dict(m).get(name, 0) for m in self._terms)

    def sorted_terms(self, names: Sequence[str] | None = None):
        names = tuple(names) if names is not None else self.indeterminates
        return sorted(self._terms.items(), key=lambda mc: grevlex_key(mc[0], names), reverse=True)

    def leading_term(self, names: Sequence[str] | None = None):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms(names)[0]

    def content_monomial(self) -> Monomial:
        """Greatest monomial dividing every term."""
        it = iter(self._terms)
        try:
            g = next(it)
        except StopIteration:
            return ONE_MONOMIAL
        for m in it:
            if not g:
                break
            g = mono_gcd(g, m)
        return g

    # arithmetic -------------------------------------------------------------
    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if is_number(other):
                other = Poly.const(other)
            else:
                return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if is_number(other):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = -c
            else:
                v = v - c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = number(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Poly":
        c = number(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({mono_mul(m, mono): v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if is_number(other):
                return self.scale(other)
            return NotImplemented
        if not self._terms or not other._terms:
            return Poly._raw({})
        out: Dict[Monomial, object] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                v = out.get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be non-negative integers")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_monomial(self, mono: Monomial) -> "Poly":
        return Poly._raw({mono_div(m, mono): c for m, c in self._terms.items()})

    def exact_divide(self, other: "Poly") -> "Poly | None":
        """Return ``self / other`` when the division is exact, else ``None``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        names = tuple(sorted(set(self.indeterminates) | set(other.indeterminates)))
        lm, lc = other.leading_term(names)
        rem = self
        quotient: Dict[Monomial, object] = {}
        guard = 0
        while rem._terms:
            guard += 1
            if guard > 100000:
                return None
            m, c = rem.leading_term(names)
            if not mono_divides(lm, m):
                return None
            qm = mono_div(m, lm)
            qc = c / lc
            quotient[qm] = quotient.get(qm, 0) + qc
            rem = rem - other.mul_term(qm, qc)
        return Poly(quotient)

    # evaluation -------------------------------------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> "Poly":
        """Replace indeterminates by numbers or polynomials.

        Names absent from the polynomial are ignored.
        """
        relevant = {n: v for n, v in bindings.items() if n in self.indeterminates}
        if not relevant:
            return self
        values = {n: Poly.coerce(v) for n, v in relevant.items()}
        powers: Dict[Tuple[str, int], Poly] = {}
        out = Poly._raw({})
        for m, c in self._terms.items():
            kept = []
            factor = Poly.const(c)
            for n, e in m:
                if n in values:
                    key = (n, e)
                    if key not in powers:
                        powers[key] = values[n] ** e
                    factor = factor * powers[key]
                else:
                    kept.append((n, e))
            out = out + factor.mul_term(tuple(kept), 1)
        return out

    def evaluate(self, bindings: Mapping[str, object]):
        """Fully evaluate to a coefficient; every indeterminate must be bound."""
        result = self.substitute(bindings)
        if not result.is_constant():
            missing = set(result.indeterminates)
            raise ValueError(f"unbound indeterminates: {sorted(missing)}")
        return result.constant_value()

    def coefficients_in(self, name: str) -> Dict[int, "Poly"]:
        """Write the polynomial as ``sum_k coeff_k * name**k``."""
        out: Dict[int, Dict[Monomial, object]] = {}
        for m, c in self._terms.items():
            e = 0
            rest = []
            for n, k in m:
                if n == name:
                    e = k
                else:
                    rest.append((n, k))
            out.setdefault(e, {})[tuple(rest)] = c
        return {k: Poly._raw(v) for k, v in out.items()}

    def derivative(self, name: str) -> "Poly":
        out: Dict[Monomial, object] = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if not e:
                continue
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            out[tuple(sorted(d.items()))] = c * e
        return Poly(out)

    # comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if is_number(other):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __iter__(self) -> Iterator:
        return iter(self._terms.items())

    # printing ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _format_monomial(m: Monomial) -> str:
    parts = []
    for n, e in m:
        parts.append(n if e == 1 else f"{n}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """ASCII rendering that the expression parser reads back exactly."""
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        if isinstance(c, Scalar) and c.re != 0:
            coeff_txt = f"({format_number(c)})"
            negative = False
        else:
            txt = format_number(c)
            negative = txt.startswith("-")
            coeff_txt = txt[1:] if negative else txt
        mono = _format_monomial(m)
        if mono:
            body = mono if coeff_txt == "1" else f"{coeff_txt}*{mono}"
        else:
            body = coeff_txt
        pieces.append(("-" if negative else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def poly_sum(items: Iterable[Poly]) -> Poly:
    acc: Dict[Monomial, object] = {}
    for p in items:
        for m, c in p.items():
            v = acc.get(m)
            acc[m] = c if v is None else v + c
    return Poly({m: c for m, c in acc.items() if c})

"""Multilinear identities over two formal products and their evaluation.

Identity text uses ``*`` for the first product (the dot), ``@`` for the
second (circle or bracket), variables ``x, y, z`` and rational scalar
coefficients, for example ``2*(x@y)*z - (x*z)@y - x@(y*z)``.  An ``=`` sign
is allowed; the identity is then ``lhs - rhs``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Dict, List, Sequence, Tuple

from ..exact import Poly, Q
from .structure import CIRC, DOT, StructurePair

VARIABLES = ("x", "y", "z", "w")

# Node shapes: ("var", idx) | ("prod", which, left, right) | ("lin", ((coef, node), ...))
Node = tuple

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[a-z])|(?P<op>[-+*@()=]))")


class IdentitySyntaxError(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise IdentitySyntaxError(f"bad character at column {pos + 1} in {text!r}")
        out.append((m.lastgroup, m.group(m.lastgroup), pos + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _IdParser:
    """Recursive descent; values are ("scalar", q) or ("vec", node)."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> Node:
        lhs = self.sum()
        if self.peek()[1] == "=":
            self.take()
            rhs = self.sum()
            lhs = ("vec", _lin([(Q(1), _vec(lhs, self.text)), (Q(-1), _vec(rhs, self.text))]))
        if self.peek()[0] != "end":
            raise IdentitySyntaxError(f"unexpected {self.peek()[1]!r} in {self.text!r}")
        return _vec(lhs, self.text)

    def sum(self):
        val = self.prod()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.prod()
            sign = Q(1) if op == "+" else Q(-1)
            if val[0] == "scalar" and rhs[0] == "scalar":
                val = ("scalar", val[1] + sign * rhs[1])
            else:
                val = ("vec", _lin([(Q(1), _vec(val, self.text)), (sign, _vec(rhs, self.text))]))
        return val

    def prod(self):
        val = self.unary()
        while self.peek()[1] in ("*", "@"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "@":
                val = ("vec", ("prod", CIRC, _vec(val, self.text), _vec(rhs, self.text)))
            elif val[0] == "scalar" and rhs[0] == "scalar":
                val = ("scalar", val[1] * rhs[1])
            elif val[0] == "scalar":
                val = ("vec", _lin([(val[1], rhs[1])]))
            elif rhs[0] == "scalar":
                val = ("vec", _lin([(rhs[1], val[1])]))
            else:
                val = ("vec", ("prod", DOT, val[1], rhs[1]))
        return val

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            v = self.unary()
            return ("scalar", -v[1]) if v[0] == "scalar" else ("vec", _lin([(Q(-1), v[1])]))
        return self.atom()

    def atom(self):
        kind, text, col = self.take()
        if kind == "num":
            from fractions import Fraction

            return ("scalar", Q(Fraction(text)))
        if kind == "name":
            if text not in VARIABLES:
                raise IdentitySyntaxError(f"unknown variable {text!r} at column {col}")
            return ("vec", ("var", VARIABLES.index(text)))
        if text == "(":
            v = self.sum()
            if self.take()[1] != ")":
                raise IdentitySyntaxError(f"missing ')' in {self.text!r}")
            return v
        raise IdentitySyntaxError(f"unexpected {text!r} at column {col} in {self.text!r}")


def _vec(v, text: str) -> Node:
    if v[0] != "vec":
        raise IdentitySyntaxError(f"scalar where a vector expression is expected in {text!r}")
    return v[1]


def _lin(items) -> Node:
    flat: List[Tuple[object, Node]] = []
    for c, node in items:
        if node[0] == "lin":
            flat.extend((c * c2, n2) for c2, n2 in node[1])
        else:
            flat.append((c, node))
    return ("lin", tuple(flat))


def _monomials(node: Node):
    """Variable multisets of the monomials of a node (for multilinearity)."""
    kind = node[0]
    if kind == "var":
        return {(node[1],)}
    if kind == "prod":
        return {tuple(sorted(a + b)) for a in _monomials(node[2]) for b in _monomials(node[3])}
    out = set()
    for _, n in node[1]:
        out |= _monomials(n)
    return out


@dataclass(frozen=True)
class VarietyIdentity:
    """A multilinear identity; ``tree`` encodes ``lhs - rhs``."""

    text: str
    arity: int = field(compare=False)
    tree: Node = field(compare=False, repr=False)

    @classmethod
    def parse(cls, text: str) -> "VarietyIdentity":
        tree = _IdParser(text).parse()
        monos = _monomials(tree)
        if not monos:
            raise IdentitySyntaxError(f"empty identity {text!r}")
        arity = max(max(m) for m in monos) + 1
        expected = tuple(range(arity))
        for m in monos:
            if m != expected:
                raise IdentitySyntaxError(f"identity {text!r} is not multilinear")
        if arity not in (2, 3):
            raise IdentitySyntaxError(f"identity {text!r} has arity {arity}; expected 2 or 3")
        return cls(text, arity, tree)

    def __str__(self) -> str:
        return self.text


def _evaluate(s: StructurePair, node: Node, args: Sequence[int], cache: Dict) -> List[Poly]:
    key = id(node)
    if key in cache:
        return cache[key]
    kind = node[0]
    if kind == "var":
        vec = [Poly.const(0), Poly.const(0)]
        vec[args[node[1]]] = Poly.const(1)
    elif kind == "prod":
        u = _evaluate(s, node[2], args, cache)
        v = _evaluate(s, node[3], args, cache)
        vec = s.multiply(node[1], u, v)
    else:
        vec = [Poly.const(0), Poly.const(0)]
        for c, sub in node[1]:
            w = _evaluate(s, sub, args, cache)
            vec = [vec[0] + w[0].scale(c), vec[1] + w[1].scale(c)]
    cache[key] = vec
    return vec


def expand_identity(s: StructurePair, identity: VarietyIdentity, basis_tuple: Sequence[int]) -> Tuple[Poly, Poly]:
    """Coordinates of ``lhs - rhs`` evaluated on basis vectors (0-based indices)."""
    if len(basis_tuple) != identity.arity:
        raise ValueError(f"identity {identity} needs {identity.arity} arguments")
    vec = _evaluate(s, identity.tree, tuple(basis_tuple), {})
    return vec[0], vec[1]


@dataclass(frozen=True)
class Violation:
    law: str
    basis_tuple: Tuple[int, ...]
    residual: Tuple[Poly, Poly]

    def __str__(self) -> str:
        args = ", ".join(f"e{i + 1}" for i in self.basis_tuple)
        return f"{self.law} at ({args}): residual ({self.residual[0]}, {self.residual[1]})"


@dataclass(frozen=True)
class VarietyReport:
    variety: str
    violations: Tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class VarietyDef:
    """A named variety of pairs: laws of each product and compatibilities."""

    name: str
    title: str
    dot_laws: Tuple[VarietyIdentity, ...]
    circ_laws: Tuple[VarietyIdentity, ...]
    compat_laws: Tuple[VarietyIdentity, ...]
    dot_role: str = "commutative associative"
    circ_role: str = ""

    @property
    def laws(self) -> Tuple[VarietyIdentity, ...]:
        return self.dot_laws + self.circ_laws + self.compat_laws

    @classmethod
    def build(cls, name: str, title: str, dot: Sequence[str], circ: Sequence[str], compat: Sequence[str], **kw) -> "VarietyDef":
        p = VarietyIdentity.parse
        return cls(name, title, tuple(map(p, dot)), tuple(map(p, circ)), tuple(map(p, compat)), **kw)


def check_variety(s: StructurePair, v: VarietyDef, stop_at_first: bool = False) -> VarietyReport:
    """Evaluate every law on every basis tuple, identically in the parameters."""
    violations: List[Violation] = []
    for law in v.laws:
        for args in iproduct(range(2), repeat=law.arity):
            res = expand_identity(s, law, args)
            if not (res[0].is_zero() and res[1].is_zero()):
                violations.append(Violation(law.text, tuple(args), res))
                if stop_at_first:
                    return VarietyReport(v.name, tuple(violations))
    return VarietyReport(v.name, tuple(violations))

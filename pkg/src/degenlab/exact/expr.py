"""Parser for ASCII rational-function expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := NUMBER | NAME | "(" expr ")"

``i`` denotes the imaginary unit.  Errors carry a 1-based column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from .poly import Poly
from .ratfun import RatFun
from .scalar import Q, Scalar

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, column: int) -> None:
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str) -> List[_Tok]:
    pos = 0
    toks: List[_Tok] = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ExprSyntaxError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start + 1))
        pos = m.end()
    toks.append(_Tok("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str, allowed: Optional[set]) -> None:
        self.toks = _tokenize(text)
        self.i = 0
        self.allowed = allowed

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.take()
        if tok.text != text:
            raise ExprSyntaxError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.col)

    def parse(self) -> RatFun:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {tok.text!r}", tok.col)
        return value

    def expr(self) -> RatFun:
        value = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFun:
        value = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op.text == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ExprSyntaxError("division by zero", op.col)
                value = value / rhs
        return value

    def unary(self) -> RatFun:
        if self.peek().text == "-":
            self.take()
            return -self.unary()
        if self.peek().text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFun:
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            sign = 1
            if self.peek().text == "-":
                self.take()
                sign = -1
            elif self.peek().text == "(":
                # allow t^(-1)
                self.take()
                if self.peek().text == "-":
                    self.take()
                    sign = -1
                tok = self.take()
                if tok.kind != "num":
                    raise ExprSyntaxError("exponent must be an integer", tok.col)
                self.expect(")")
                return self._raise(base, sign * int(tok.text), tok.col)
            tok = self.take()
            if tok.kind != "num":
                raise ExprSyntaxError("exponent must be an integer", tok.col)
            return self._raise(base, sign * int(tok.text), tok.col)
        return base

    @staticmethod
    def _raise(base: RatFun, n: int, col: int) -> RatFun:
        if n < 0 and base.is_zero():
            raise ExprSyntaxError("negative power of zero", col)
        return base**n

    def atom(self) -> RatFun:
        tok = self.take()
        if tok.kind == "num":
            return RatFun(Poly.const(Q(int(tok.text))))
        if tok.kind == "name":
            if tok.text == "i":
                return RatFun(Poly.const(Scalar(0, 1)))
            if self.allowed is not None and tok.text not in self.allowed:
                raise ExprSyntaxError(f"undeclared name {tok.text!r}", tok.col)
            return RatFun(Poly.var(tok.text))
        if tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.col)


def parse_ratfun(text: str, names: Optional[Iterable[str]] = None) -> RatFun:
    """Parse an expression; ``names`` restricts the allowed indeterminates."""
    allowed = set(names) if names is not None else None
    return _Parser(text, allowed).parse()


def parse_poly(text: str, names: Optional[Iterable[str]] = None) -> Poly:
    """Parse an expression that must be polynomial."""
    r = parse_ratfun(text, names)
    if not r.is_polynomial():
        raise ExprSyntaxError(f"{text!r} is not a polynomial", 1)
    return r.to_poly()


def parse_vector(text: str, names: Optional[Iterable[str]] = None, basis=("e1", "e2")):
    """Parse a linear combination of basis symbols into coefficient RatFuns."""
    allowed = None if names is None else set(names) | set(basis)
    r = _Parser(text, allowed).parse()
    num, den = r.num, r.den
    if any(b in den.indeterminates for b in basis):
        raise ExprSyntaxError(f"basis symbol in a denominator: {text!r}", 1)
    coeffs = [Poly.const(0) for _ in basis]
    for mono, c in num.items():
        hits = [(k, e) for k, (n, e) in enumerate(mono) if n in basis]
        if len(hits) != 1 or hits[0][1] != 1:
            raise ExprSyntaxError(f"not linear in {basis}: {text!r}", 1)
        k, _ = hits[0]
        idx = basis.index(mono[k][0])
        rest = mono[:k] + mono[k + 1:]
        coeffs[idx] = coeffs[idx] + Poly({rest: c})
    return [RatFun(c, den) for c in coeffs]

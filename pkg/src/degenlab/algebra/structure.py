"""Structure constants of 2-dimensional bilinear pairs and the basis-change action."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..exact import Poly, RatFun
from ..exact.expr import parse_poly, parse_vector

DIM = 2
DOT, CIRC = 0, 1
PRODUCT_NAMES = ("dot", "circ")


def flat_index(i: int, j: int, k: int) -> int:
    """Position of c_ij^k (0-based indices) inside an 8-entry table."""
    return (i * DIM + j) * DIM + k


def coordinate_name(product: int, i: int, j: int, k: int) -> str:
    """ASCII name of a structure constant; indices are 0-based here."""
    prefix = "c" if product == DOT else "cp"
    return f"{prefix}{i + 1}{j + 1}_{k + 1}"


COORDINATES: Tuple[str, ...] = tuple(
    coordinate_name(p, i, j, k) for p in (DOT, CIRC) for i in range(DIM) for j in range(DIM) for k in range(DIM)
)
COORDINATE_INDEX: Dict[str, int] = {n: idx for idx, n in enumerate(COORDINATES)}


class SingularBasis(ArithmeticError):
    """The basis matrix has zero determinant."""


@dataclass(frozen=True)
class ParamSpec:
    """Parameter names of a family and the conditions ``p != 0`` it must respect."""

    names: Tuple[str, ...] = ()
    exclusions: Tuple[Poly, ...] = ()

    def __post_init__(self) -> None:
        for p in self.exclusions:
            if p.is_zero():
                raise ValueError("an exclusion polynomial must be nonzero")
            stray = set(p.indeterminates) - set(self.names)
            if stray:
                raise ValueError(f"exclusion mentions undeclared parameters {sorted(stray)}")

    def admits(self, values: Mapping[str, object]) -> bool:
        return all(p.evaluate(values) != 0 for p in self.exclusions)


@dataclass(frozen=True)
class StructurePair:
    """Two bilinear products on a 2-dimensional space.

    ``dot`` and ``circ`` are flat 8-tuples of polynomials in the parameter
    names, indexed by :func:`flat_index`.
    """

    dot: Tuple[Poly, ...]
    circ: Tuple[Poly, ...]
    params: ParamSpec = field(default_factory=ParamSpec)

    def __post_init__(self) -> None:
        if len(self.dot) != 8 or len(self.circ) != 8:
            raise ValueError("a 2-dimensional pair has exactly 16 structure constants")
        allowed = set(self.params.names)
        for p in self.dot + self.circ:
            stray = set(p.indeterminates) - allowed
            if stray:
                raise ValueError(f"structure constant uses undeclared names {sorted(stray)}")

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls) -> "StructurePair":
        z = tuple(Poly.const(0) for _ in range(8))
        return cls(z, z, ParamSpec())

    @classmethod
    def from_tables(
        cls,
        dot: Mapping[str, str] | None = None,
        circ: Mapping[str, str] | None = None,
        params: Sequence[str] = (),
        exclusions: Sequence[str] = (),
        complete_dot: bool = False,
    ) -> "StructurePair":
        """Build from tables such as ``{"11": "e1", "12": "alpha*e2"}``.

        Only explicitly listed products are nonzero.  With ``complete_dot``
        a missing ``"ji"`` entry of the first product copies ``"ij"``, the
        convention for commutative tables that list each pair once.
        """
        names = tuple(params)
        dot = dict(dot or {})
        if complete_dot:
            for key in list(dot):
                dot.setdefault(key[::-1], dot[key])
        tables = []
        for table in (dot, circ or {}):
            flat: List[Poly] = [Poly.const(0)] * 8
            for key, vec in table.items():
                i, j = int(key[0]) - 1, int(key[1]) - 1
                coeffs = parse_vector(vec, names)
                for k, c in enumerate(coeffs):
                    flat[flat_index(i, j, k)] = c.to_poly()
            tables.append(tuple(flat))
        spec = ParamSpec(names, tuple(parse_poly(e, names) for e in exclusions))
        return cls(tables[0], tables[1], spec)

    @classmethod
    def from_constants(cls, values: Sequence[object], params: ParamSpec | None = None) -> "StructurePair":
        polys = [RatFun.coerce(v).to_poly() if not isinstance(v, Poly) else v for v in values]
        return cls(tuple(polys[:8]), tuple(polys[8:]), params or ParamSpec())

    # access -------------------------------------------------------------
    def table(self, product: int) -> Tuple[Poly, ...]:
        return self.dot if product == DOT else self.circ

    def constant(self, product: int, i: int, j: int, k: int) -> Poly:
        return self.table(product)[flat_index(i, j, k)]

    def constants(self) -> Tuple[Poly, ...]:
        """All 16 constants in :data:`COORDINATES` order."""
        return self.dot + self.circ

    def coordinates(self) -> Dict[str, Poly]:
        return dict(zip(COORDINATES, self.constants()))

    def is_concrete(self) -> bool:
        return all(p.is_constant() for p in self.constants())

    def product_is_zero(self, product: int) -> bool:
        return all(p.is_zero() for p in self.table(product))

    def multiply(self, product: int, u: Sequence[Poly], v: Sequence[Poly]) -> List[Poly]:
        """Product of two coordinate vectors."""
        tab = self.table(product)
        out = [Poly.const(0), Poly.const(0)]
        for i in range(DIM):
            if u[i].is_zero():
                continue
            for j in range(DIM):
                if v[j].is_zero():
                    continue
                uv = u[i] * v[j]
                for k in range(DIM):
                    c = tab[flat_index(i, j, k)]
                    if not c.is_zero():
                        out[k] = out[k] + uv * c
        return out

    # transformation -----------------------------------------------------
    def substitute(self, values: Mapping[str, object]) -> "StructurePair":
        """Specialise some or all parameters to numbers or polynomials."""
        dot = tuple(p.substitute(values) for p in self.dot)
        circ = tuple(p.substitute(values) for p in self.circ)
        remaining = tuple(n for n in self.params.names if n not in values)
        used = set()
        for p in dot + circ:
            used.update(p.indeterminates)
        names = tuple(dict.fromkeys(remaining + tuple(sorted(used - set(remaining)))))
        exclusions = []
        for e in self.params.exclusions:
            s = e.substitute(values)
            if s.is_constant():
                if s.is_zero():
                    raise ValueError(f"specialisation violates the exclusion {e} != 0")
                continue
            exclusions.append(s)
        return StructurePair(dot, circ, ParamSpec(names, tuple(exclusions)))

    def with_params(self, params: ParamSpec) -> "StructurePair":
        return StructurePair(self.dot, self.circ, params)

    def describe(self) -> str:
        """Human-readable list of the nonzero products."""
        parts = []
        for prod, sym in ((DOT, "*"), (CIRC, "@")):
            for i in range(DIM):
                for j in range(DIM):
                    vec = [self.constant(prod, i, j, k) for k in range(DIM)]
                    text = format_vector(vec)
                    if text != "0":
                        parts.append(f"e{i + 1}{sym}e{j + 1} = {text}")
        return "; ".join(parts) if parts else "zero"


def format_vector(vec: Sequence[object]) -> str:
    pieces = []
    for k, c in enumerate(vec):
        c = RatFun.coerce(c)
        if c.is_zero():
            continue
        txt = str(c)
        basis = f"e{k + 1}"
        if txt == "1":
            pieces.append(basis)
        elif txt == "-1":
            pieces.append(f"-{basis}")
        elif " " in txt:
            pieces.append(f"({txt})*{basis}")
        else:
            pieces.append(f"{txt}*{basis}")
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@dataclass(frozen=True)
class BasisMatrix:
    """Rows are the new basis vectors: ``E_i = sum_j a[i][j] e_j``."""

    rows: Tuple[Tuple[RatFun, RatFun], Tuple[RatFun, RatFun]]

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]]) -> "BasisMatrix":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a basis matrix is 2x2")
        return cls(tuple(tuple(RatFun.coerce(x) for x in r) for r in rows))  # type: ignore[arg-type]

    @classmethod
    def from_vectors(cls, e1: str, e2: str, names: Iterable[str] | None = None) -> "BasisMatrix":
        """Parse basis vectors written as ``t*e1 + e2``."""
        names = None if names is None else tuple(names)
        return cls.of([parse_vector(e1, names), parse_vector(e2, names)])

    @classmethod
    def identity(cls) -> "BasisMatrix":
        return cls.of([[1, 0], [0, 1]])

    def det(self) -> RatFun:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def adjugate(self):
        (a, b), (c, d) = self.rows
        return ((d, -b), (-c, a))

    def __matmul__(self, other: "BasisMatrix") -> "BasisMatrix":
        out = []
        for i in range(2):
            row = []
            for j in range(2):
                row.append(self.rows[i][0] * other.rows[0][j] + self.rows[i][1] * other.rows[1][j])
            out.append(row)
        return BasisMatrix.of(out)

    def substitute(self, values: Mapping[str, object]) -> "BasisMatrix":
        return BasisMatrix.of([[x.substitute(values) for x in r] for r in self.rows])

    def __str__(self) -> str:
        return "E1 = " + format_vector(self.rows[0]) + ", E2 = " + format_vector(self.rows[1])


def change_basis(source, m: BasisMatrix) -> Tuple[RatFun, ...]:
    """Structure constants of both products in the basis given by ``m``.

    ``source`` is a :class:`StructurePair` or a sequence of 16 constants
    (polynomials or rational functions) in :data:`COORDINATES` order.
    """
    consts = source.constants() if isinstance(source, StructurePair) else tuple(source)
    if len(consts) != 16:
        raise ValueError("expected 16 structure constants")
    consts = [RatFun.coerce(c) for c in consts]
    det = m.det()
    if det.is_zero():
        raise SingularBasis(f"basis {m} is singular")
    adj = m.adjugate()
    a = m.rows
    out: List[RatFun] = []
    for prod in (DOT, CIRC):
        tab = consts[8 * prod: 8 * prod + 8]
        if all(c.is_zero() for c in tab):
            out.extend([RatFun(0)] * 8)
            continue
        for i in range(DIM):
            for j in range(DIM):
                # product of the new basis vectors, in old coordinates
                v = [RatFun(0), RatFun(0)]
                for p in range(DIM):
                    if a[i][p].is_zero():
                        continue
                    for q in range(DIM):
                        if a[j][q].is_zero():
                            continue
                        w = a[i][p] * a[j][q]
                        for r in range(DIM):
                            c = tab[flat_index(p, q, r)]
                            if not c.is_zero():
                                v[r] = v[r] + w * c
                for k in range(DIM):
                    s = v[0] * adj[0][k] + v[1] * adj[1][k]
                    out.append(s / det)
    return tuple(out)


def transform_pair(pair: StructurePair, m: BasisMatrix) -> StructurePair:
    """Apply a polynomial-valued basis change whose result stays polynomial."""
    return StructurePair.from_constants(change_basis(pair, m), pair.params)


def change_basis_numerators(consts: Sequence[Poly], rows: Sequence[Sequence[Poly]]) -> Tuple[List[Poly], Poly]:
    """Polynomial form of :func:`change_basis` for a polynomial matrix.

    Returns ``(numerators, det)`` with new constant ``k`` equal to
    ``numerators[k] / det``.
    """
    (a, b), (c, d) = rows
    det = a * d - b * c
    adj = ((d, -b), (-c, a))
    out: List[Poly] = []
    zero = Poly.const(0)
    for prod in (DOT, CIRC):
        tab = consts[8 * prod: 8 * prod + 8]
        if all(x.is_zero() for x in tab):
            out.extend([zero] * 8)
            continue
        for i in range(DIM):
            for j in range(DIM):
                v = [zero, zero]
                for p in range(DIM):
                    if rows[i][p].is_zero():
                        continue
                    for q in range(DIM):
                        if rows[j][q].is_zero():
                            continue
                        w = rows[i][p] * rows[j][q]
                        for r in range(DIM):
                            x = tab[flat_index(p, q, r)]
                            if not x.is_zero():
                                v[r] = v[r] + w * x
                for k in range(DIM):
                    out.append(v[0] * adj[0][k] + v[1] * adj[1][k])
    return out, det

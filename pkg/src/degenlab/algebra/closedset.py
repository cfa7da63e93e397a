"""Zariski-closed subsets of structure-constant space given by free coordinates and relations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from ..exact import Poly
from ..exact.expr import parse_poly
from .structure import COORDINATES, StructurePair


def parse_relation(text: str, names: Sequence[str]) -> Poly:
    """Parse ``lhs = rhs`` (or a bare expression) into ``lhs - rhs``."""
    if text.count("=") > 1:
        raise ValueError(f"relation {text!r} has more than one '='")
    if "=" in text:
        lhs, rhs = text.split("=")
        return parse_poly(lhs, names) - parse_poly(rhs, names)
    return parse_poly(text, names)


@dataclass(frozen=True)
class ClosedSetSpec:
    """Free coordinates plus relations; every other coordinate is zero.

    Relations are polynomials in the coordinate names and, optionally, in
    the parameter names listed in ``params``.
    """

    free: Tuple[str, ...]
    relations: Tuple[Poly, ...] = ()
    params: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        unknown = set(self.free) - set(COORDINATES)
        if unknown:
            raise ValueError(f"unknown coordinates {sorted(unknown)}")
        allowed = set(COORDINATES) | set(self.params)
        for r in self.relations:
            stray = set(r.indeterminates) - allowed
            if stray:
                raise ValueError(f"relation {r} uses unknown names {sorted(stray)}")
            if r.is_zero():
                raise ValueError("a relation must be a nonzero polynomial")

    @classmethod
    def parse(cls, free: Sequence[str], relations: Sequence[str] = (), params: Sequence[str] = ()) -> "ClosedSetSpec":
        names = tuple(COORDINATES) + tuple(params)
        return cls(tuple(free), tuple(parse_relation(r, names) for r in relations), tuple(params))

    @classmethod
    def whole_space(cls) -> "ClosedSetSpec":
        return cls(tuple(COORDINATES))

    def mentioned(self) -> Tuple[str, ...]:
        seen = set(self.free)
        for r in self.relations:
            seen.update(n for n in r.indeterminates if n in COORDINATES)
        return tuple(c for c in COORDINATES if c in seen)

    def zero_coordinates(self) -> Tuple[str, ...]:
        """Coordinates forced to vanish by the convention."""
        m = set(self.mentioned())
        return tuple(c for c in COORDINATES if c not in m)

    def equations(self) -> Tuple[Poly, ...]:
        """Defining polynomials: relations plus the zero coordinates."""
        return self.relations + tuple(Poly.var(c) for c in self.zero_coordinates())

    def specialise(self, values: Mapping[str, object]) -> "ClosedSetSpec":
        rels = []
        for r in self.relations:
            s = r.substitute(values)
            if s.is_zero():
                continue
            rels.append(s)
        params = tuple(p for p in self.params if p not in values)
        return ClosedSetSpec(self.free, tuple(rels), params)

    def residuals(self, pair: StructurePair) -> Dict[str, Poly]:
        """Nonzero residuals of the defining equations at ``pair`` (identically in its parameters)."""
        coords = pair.coordinates()
        out: Dict[str, Poly] = {}
        for c in self.zero_coordinates():
            if not coords[c].is_zero():
                out[c] = coords[c]
        for r in self.relations:
            v = r.substitute(coords)
            if not v.is_zero():
                out[str(r)] = v
        return out

    def contains(self, pair: StructurePair) -> bool:
        return not self.residuals(pair)

    def describe(self) -> str:
        rel = ", ".join(f"{r} = 0" for r in self.relations)
        return f"free {', '.join(self.free) or '-'}" + (f"; {rel}" if rel else "")

"""Compact constructors used by the built-in catalog modules."""

from __future__ import annotations

import itertools
import re
from dataclasses import replace
from typing import Dict, List, Sequence, Tuple

from ...algebra.closedset import ClosedSetSpec
from ...algebra.identities import VarietyIdentity, expand_identity
from ...algebra.structure import COORDINATES, ParamSpec, StructurePair
from ...exact import Poly
from ...exact.expr import parse_vector
from ..models import (
    AutFamily,
    CatalogEntry,
    ComponentClaim,
    Figure,
    FigureEdge,
    FigureNode,
    NonDegenRow,
    Radical,
    TargetSpec,
    WitnessRow,
)

# parameter names allowed in witness and closed-set expressions, in canonical order
SYMBOLS = ("alpha", "beta", "gamma", "delta", "eps", "lam", "xi", "nu", "r")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def symbols_in(*texts: str) -> Tuple[str, ...]:
    found = set()
    for text in texts:
        found.update(n for n in _NAME.findall(text) if n in SYMBOLS)
    return tuple(s for s in SYMBOLS if s in found)


def vector_row(text: str, names: Sequence[str]) -> Tuple[str, str]:
    """``"t*e1 - e2/t"`` as the coefficient strings ``("t", "-1/t")``."""
    coeffs = parse_vector(text, names)
    return str(coeffs[0]), str(coeffs[1])


def identity_relations(law: str) -> Tuple[str, ...]:
    """Polynomials in the 16 coordinates expressing that a law holds."""
    pair = StructurePair.from_constants([Poly.var(c) for c in COORDINATES], ParamSpec(COORDINATES))
    law_id = VarietyIdentity.parse(law)
    out: List[str] = []
    for args in itertools.product(range(2), repeat=law_id.arity):
        for p in expand_identity(pair, law_id, args):
            if not p.is_zero() and str(p) not in out and str(-p) not in out:
                out.append(str(p))
    return tuple(out)


def tg(id: str, *args: str, cond: Sequence[str] = (), any: Sequence[Sequence[str]] = ()) -> TargetSpec:
    """A non-degeneration target; symbols are read off the argument and condition texts."""
    texts = list(args) + list(cond) + [x for g in any for x in g]
    return TargetSpec(id, tuple(args), symbols_in(*texts), tuple(cond), tuple(tuple(g) for g in any))


class Builder:
    """Accumulates the records of one variety."""

    def __init__(self, variety: str) -> None:
        self.variety = variety
        self.entries: List[CatalogEntry] = []
        self.witnesses: List[WitnessRow] = []
        self.nondegen: List[NonDegenRow] = []
        self.nodes: List[FigureNode] = []
        self.edges: List[FigureEdge] = []
        self.claimed: Tuple[str, ...] = ()
        self._ids: Dict[str, int] = {}

    # algebras ------------------------------------------------------------
    def alg(
        self,
        id: str,
        dot: Dict[str, str] | None = None,
        circ: Dict[str, str] | None = None,
        params: Sequence[str] = (),
        excl: Sequence[str] = (),
        label: str = "",
        notes: Sequence[str] = (),
        complete: bool = True,
        autos: Sequence[AutFamily] = (),
    ) -> CatalogEntry:
        pair = StructurePair.from_tables(dot, circ, params, excl, complete_dot=complete)
        e = CatalogEntry(self.variety, id, pair, label, tuple(notes), tuple(autos))
        self.entries.append(e)
        return e

    def adopt(self, entries: Sequence[CatalogEntry], ids: Sequence[str] | None = None) -> None:
        """Reuse entries of another variety under this variety's name."""
        for e in entries:
            if ids is None or e.id in ids:
                self.entries.append(CatalogEntry(self.variety, e.id, e.pair, e.label, e.notes, e.automorphisms))

    # witnesses -----------------------------------------------------------
    def _row_id(self, stem: str) -> str:
        n = self._ids.get(stem, 0) + 1
        self._ids[stem] = n
        return stem if n == 1 else f"{stem}#{n}"

    def wit(
        self,
        source: str,
        target: str,
        e1: str,
        e2: str,
        sargs: Sequence[str] = (),
        targs: Sequence[str] = (),
        cond: Sequence[str] = (),
        solve: Sequence[str] = (),
        radicals: Sequence[Radical] = (),
        origin: str = "table",
        group: str = "primary",
        note: str = "",
        symbols: Sequence[str] | None = None,
    ) -> WitnessRow:
        if symbols is None:
            rad_texts = [r.radicand for r in radicals] + [r.root for r in radicals]
            symbols = symbols_in(e1, e2, *sargs, *targs, *cond, *solve, *rad_texts)
        names = ("t",) + tuple(symbols)
        basis = (vector_row(e1, names), vector_row(e2, names))
        label_s = f"^{{{','.join(sargs)}}}" if sargs else ""
        label_t = f"^{{{','.join(targs)}}}" if targs else ""
        row = WitnessRow(
            id=self._row_id(f"{self.variety}:{source}{label_s}->{target}{label_t}"),
            variety=self.variety,
            source=source,
            target=target,
            basis=basis,
            source_args=tuple(sargs),
            target_args=tuple(targs),
            symbols=tuple(symbols),
            conditions=tuple(cond),
            solve=tuple(solve),
            radicals=tuple(radicals),
            origin=origin,
            group=group,
            note=note,
        )
        self.witnesses.append(row)
        return row

    def fam(self, source: str, target: str, e1: str, e2: str, sargs: Sequence[str], targs: Sequence[str] = (), **kw) -> WitnessRow:
        return self.wit(source, target, e1, e2, sargs, targs, group="family", **kw)

    def reuse(self, rows: Sequence[WitnessRow], origin: str = "shared") -> None:
        """Copy witness rows of another variety whose endpoints exist here."""
        ids = {e.id for e in self.entries}
        for r in rows:
            if r.source in ids and r.target in ids:
                stem = r.id.split(":", 1)[1].split("#")[0]
                self.witnesses.append(replace(r, id=self._row_id(f"{self.variety}:{stem}"), variety=self.variety, origin=origin))

    # non-degenerations ---------------------------------------------------
    def nd(
        self,
        source: str,
        targets: Sequence[TargetSpec],
        free: Sequence[str],
        rels: Sequence[str] = (),
        sargs: Sequence[str] = (),
        family: bool = False,
        cond: Sequence[str] = (),
        origin: str = "table",
        note: str = "",
    ) -> NonDegenRow:
        params = () if family else symbols_in(*sargs, *rels, *cond)
        c = ClosedSetSpec.parse(free, rels, params)
        label = "*" if family else (f"^{{{','.join(sargs)}}}" if sargs else "")
        row = NonDegenRow(
            id=self._row_id(f"{self.variety}:{source}{label}-/->"),
            variety=self.variety,
            source=source,
            targets=tuple(targets),
            closed_set=c,
            source_args=tuple(sargs),
            family=family,
            conditions=tuple(cond),
            origin=origin,
            note=note,
        )
        self.nondegen.append(row)
        return row

    # figure and claim ----------------------------------------------------
    def node(self, key: str, level: int, entry: str | None = None, args: Sequence[str] = (), where: Sequence[str] = (), label: str = "") -> None:
        self.nodes.append(FigureNode(key, entry or key.split("^")[0], level, tuple(args), tuple(where), label))

    def edge(self, source: str, target: str, label: str = "") -> None:
        self.edges.append(FigureEdge(source, target, label))

    def claim(self, *ids: str) -> None:
        self.claimed = tuple(ids)

    def figure(self) -> Figure | None:
        if not self.nodes:
            return None
        return Figure(self.variety, tuple(self.nodes), tuple(self.edges))

    def component_claim(self) -> ComponentClaim | None:
        return ComponentClaim(self.variety, self.claimed) if self.claimed else None

"""Records of the verification catalog: algebras, witnesses, closed sets, figures, claims."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..algebra.closedset import ClosedSetSpec
from ..algebra.identities import VarietyDef
from ..algebra.structure import StructurePair

ZERO_ID = "C8"


@dataclass(frozen=True)
class AutFamily:
    """Automorphisms ``phi(e_i) = sum_j rows[i][j] e_j`` of a base algebra, over a parameter domain."""

    params: Tuple[str, ...]
    rows: Tuple[Tuple[str, str], Tuple[str, str]]
    exclusions: Tuple[str, ...] = ()
    label: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    variety: str
    id: str
    pair: StructurePair
    label: str = ""
    notes: Tuple[str, ...] = ()
    automorphisms: Tuple[AutFamily, ...] = ()

    @property
    def params(self) -> Tuple[str, ...]:
        return self.pair.params.names

    @property
    def display(self) -> str:
        return self.label or self.id


@dataclass(frozen=True)
class Radical:
    """Rational parametrisation of a square root: ``radicand = root^2`` solved for ``solve_for``."""

    root: str
    radicand: str
    solve_for: str


@dataclass(frozen=True)
class WitnessRow:
    """A parametrised basis ``E_i(t) = sum_j basis[i][j] e_j`` realising source -> target.

    ``source_args`` and ``target_args`` are expressions in ``t`` and the
    row's ``symbols``; an empty tuple means the entry has no parameters.
    Names in ``solve`` are target values fixed at verification time.
    """

    id: str
    variety: str
    source: str
    target: str
    basis: Tuple[Tuple[str, str], Tuple[str, str]]
    source_args: Tuple[str, ...] = ()
    target_args: Tuple[str, ...] = ()
    symbols: Tuple[str, ...] = ()
    conditions: Tuple[str, ...] = ()
    solve: Tuple[str, ...] = ()
    radicals: Tuple[Radical, ...] = ()
    origin: str = "table"
    group: str = "primary"
    note: str = ""


@dataclass(frozen=True)
class TargetSpec:
    """A target of a non-degeneration row, sampled over its symbols.

    ``conditions`` are polynomials required nonzero; each group in ``any``
    lists polynomials that must not all vanish.
    """

    id: str
    args: Tuple[str, ...] = ()
    symbols: Tuple[str, ...] = ()
    conditions: Tuple[str, ...] = ()
    any: Tuple[Tuple[str, ...], ...] = ()


@dataclass(frozen=True)
class NonDegenRow:
    """``source`` (a member, or with ``family`` the whole family) does not degenerate to ``targets``.

    ``closed_set.params`` are the source symbols, also used in ``source_args``.
    """

    id: str
    variety: str
    source: str
    targets: Tuple[TargetSpec, ...]
    closed_set: ClosedSetSpec
    source_args: Tuple[str, ...] = ()
    family: bool = False
    conditions: Tuple[str, ...] = ()
    origin: str = "table"
    note: str = ""


@dataclass(frozen=True)
class FigureNode:
    key: str
    entry: str
    level: int
    args: Tuple[str, ...] = ()
    where: Tuple[str, ...] = ()
    label: str = ""


@dataclass(frozen=True)
class FigureEdge:
    source: str
    target: str
    label: str = ""


@dataclass(frozen=True)
class Figure:
    variety: str
    nodes: Tuple[FigureNode, ...]
    edges: Tuple[FigureEdge, ...]


@dataclass(frozen=True)
class ComponentClaim:
    variety: str
    claim: Tuple[str, ...]


@dataclass(frozen=True)
class Catalog:
    varieties: Tuple[VarietyDef, ...]
    entries: Tuple[CatalogEntry, ...]
    witnesses: Tuple[WitnessRow, ...] = ()
    nondegen: Tuple[NonDegenRow, ...] = ()
    figures: Tuple[Figure, ...] = ()
    components: Tuple[ComponentClaim, ...] = ()

    def variety(self, name: str) -> VarietyDef:
        for v in self.varieties:
            if v.name == name:
                return v
        raise KeyError(f"unknown variety {name!r}")

    def variety_names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.varieties)

    def entries_of(self, variety: str) -> Tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if e.variety == variety)

    def entry(self, variety: str, id: str) -> CatalogEntry:
        for e in self.entries:
            if e.variety == variety and e.id == id:
                return e
        raise KeyError(f"no entry {id!r} in variety {variety!r}")

    def witnesses_of(self, variety: str) -> Tuple[WitnessRow, ...]:
        return tuple(w for w in self.witnesses if w.variety == variety)

    def nondegen_of(self, variety: str) -> Tuple[NonDegenRow, ...]:
        return tuple(r for r in self.nondegen if r.variety == variety)

    def figure(self, variety: str) -> Optional[Figure]:
        return next((f for f in self.figures if f.variety == variety), None)

    def claim(self, variety: str) -> Optional[ComponentClaim]:
        return next((c for c in self.components if c.variety == variety), None)

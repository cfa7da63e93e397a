"""The catalog shipped with the package, assembled from per-variety modules."""

from __future__ import annotations

from functools import lru_cache
from typing import List

from ...algebra.varieties import BUILTIN_VARIETIES
from ..models import Catalog
from ._dsl import Builder
from .antiprelie import anti_pre_lie_poisson
from .base import comm_assoc, zinbiel
from .leibniz import leibniz_poisson, transposed_leibniz_poisson, transposed_poisson
from .novikov import novikov_poisson, pre_lie_poisson
from .prelie import commutative_pre_lie, pre_poisson


def generic_poisson(ca: Builder, lp: Builder) -> Builder:
    """Commutative associative algebras with zero bracket, plus the Lie algebra with zero product."""
    b = Builder("generic-poisson")
    b.adopt([e for e in ca.entries if e.id != "C8"])
    b.adopt(lp.entries, ids=("L3", "C8"))
    return b


def builders() -> List[Builder]:
    ca, lp, np = comm_assoc(), leibniz_poisson(), novikov_poisson()
    return [
        ca,
        zinbiel(),
        lp,
        generic_poisson(ca, lp),
        transposed_leibniz_poisson(),
        transposed_poisson(),
        np,
        pre_lie_poisson(np),
        commutative_pre_lie(),
        anti_pre_lie_poisson(),
        pre_poisson(),
    ]


@lru_cache(maxsize=1)
def builtin_catalog() -> Catalog:
    """The shipped catalog; built once and cached."""
    parts = builders()
    names = [b.variety for b in parts]
    return Catalog(
        varieties=tuple(BUILTIN_VARIETIES[n] for n in names),
        entries=tuple(e for b in parts for e in b.entries),
        witnesses=tuple(w for b in parts for w in b.witnesses),
        nondegen=tuple(r for b in parts for r in b.nondegen),
        figures=tuple(f for f in (b.figure() for b in parts) if f is not None),
        components=tuple(c for c in (b.component_claim() for b in parts) if c is not None),
    )

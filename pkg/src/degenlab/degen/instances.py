"""Evaluating catalog entries at parameter expressions."""

from __future__ import annotations

from typing import Dict, List, Mapping, Sequence

from ..algebra.structure import ParamSpec, StructurePair
from ..catalog.models import CatalogEntry
from ..exact import Poly, RatFun
from ..exact.expr import parse_ratfun


def parse_args(texts: Sequence[str], names: Sequence[str]) -> List[RatFun]:
    return [parse_ratfun(t, names) for t in texts]


def _check_arity(entry: CatalogEntry, args: Sequence[object]) -> None:
    if len(args) != len(entry.params):
        raise ValueError(f"{entry.id} takes {len(entry.params)} parameters, got {len(args)}")


def simultaneous(values: Mapping[str, RatFun]) -> Dict[str, RatFun]:
    """Fresh placeholder names so that a sequential substitution acts simultaneously."""
    return {name: RatFun.var(f"_p{k}") for k, name in enumerate(values)}


def entry_constants(entry: CatalogEntry, args: Sequence[RatFun]) -> List[RatFun]:
    """The 16 constants of ``entry`` with its parameters replaced by ``args``."""
    _check_arity(entry, args)
    consts = [RatFun(p) for p in entry.pair.constants()]
    if not args:
        return consts
    rename = simultaneous(dict(zip(entry.params, args)))
    final = {f"_p{k}": a for k, a in enumerate(args)}
    return [c.substitute(rename).substitute(final) for c in consts]


def entry_exclusions(entry: CatalogEntry, args: Sequence[RatFun]) -> List[RatFun]:
    """Exclusion polynomials of ``entry`` evaluated at ``args`` (each must stay nonzero)."""
    _check_arity(entry, args)
    rename = simultaneous(dict(zip(entry.params, args)))
    final = {f"_p{k}": a for k, a in enumerate(args)}
    return [RatFun(p).substitute(rename).substitute(final) for p in entry.pair.params.exclusions]


def instantiate(entry: CatalogEntry, args: Sequence[RatFun], params: Sequence[str] = ()) -> StructurePair:
    """A :class:`StructurePair` for ``entry`` at polynomial ``args`` in the names ``params``."""
    consts = entry_constants(entry, args)
    polys = []
    for c in consts:
        if not c.is_polynomial():
            raise ValueError(f"argument makes constant {c} of {entry.id} non-polynomial")
        polys.append(c.to_poly())
    return StructurePair.from_constants(polys, ParamSpec(tuple(params)))


def is_admissible(values: Mapping[str, object], nonzero: Sequence[RatFun]) -> bool:
    """Every expression evaluates to a defined nonzero number at ``values``."""
    for p in nonzero:
        try:
            if p.num.evaluate(values) == 0 or p.den.evaluate(values) == 0:
                return False
        except ValueError:
            return False
    return True

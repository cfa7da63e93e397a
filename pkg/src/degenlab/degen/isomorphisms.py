"""Stated identifications between catalog entries and within-family non-isomorphism."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.structure import BasisMatrix, change_basis
from ..catalog.models import Catalog
from ..exact import RatFun, format_number
from ..exact.expr import parse_ratfun
from ..solver.groebner import DEFAULT_LIMITS, Limits, ResourceLimit
from ..solver.orbits import are_isomorphic
from .instances import entry_constants, entry_exclusions, instantiate, is_admissible, parse_args
from .sampling import SamplingError, sample_assignments


@dataclass(frozen=True)
class Identification:
    """``left`` at ``left_args`` is isomorphic (or, with ``equal``, literally equal) to ``right`` at ``right_args``.

    ``matrix`` gives an explicit basis change checked identically in the
    symbols; without it the claim is decided by the solver at samples.
    """

    variety: str
    left: str
    left_args: Tuple[str, ...]
    right: str
    right_args: Tuple[str, ...]
    symbols: Tuple[str, ...] = ()
    matrix: Optional[Tuple[Tuple[str, str], Tuple[str, str]]] = None
    equal: bool = False

    @property
    def id(self) -> str:
        def side(e, a):
            return f"{e}^{{{','.join(a)}}}" if a else e

        rel = "=" if self.equal else "~"
        return f"{self.variety}:{side(self.left, self.left_args)}{rel}{side(self.right, self.right_args)}"


STATED_IDENTIFICATIONS = (
    Identification("novikov-poisson", "N07", ("alpha", "beta"), "N07", ("beta", "alpha"), ("alpha", "beta")),
    Identification("anti-pre-lie-poisson", "A10", ("alpha", "beta"), "A10", ("beta", "alpha"), ("alpha", "beta")),
    Identification("comm-pre-lie", "C15", ("alpha",), "C15", ("-alpha",), ("alpha",), matrix=(("-1", "0"), ("0", "1"))),
    Identification("anti-pre-lie-poisson", "A15", ("1/2",), "A16", ("0",), equal=True),
)

# families whose classification asserts pairwise non-isomorphism up to the identifications above
NONISOMORPHIC_FAMILIES = (
    ("leibniz-poisson", ("L5", "L6", "L7")),
    ("transposed-leibniz-poisson", ("T5", "T7")),
    ("novikov-poisson", ("N06", "N07", "N08", "N09", "N10", "N11", "N12", "N13", "N14")),
    ("comm-pre-lie", ("C05", "C06", "C10", "C12", "C15", "C17")),
    ("anti-pre-lie-poisson", ("A06", "A08", "A10", "A11", "A12", "A13", "A14", "A15", "A16", "A18")),
    ("pre-poisson", ("P09",)),
)


@dataclass(frozen=True)
class IsoCheck:
    id: str
    kind: str  # "identification" or "distinct"
    passed: bool
    samples: Tuple[str, ...]
    diagnostics: Tuple[str, ...] = ()


def _label(values: Dict[str, object]) -> str:
    return ",".join(f"{k}={format_number(v)}" for k, v in values.items())


def _args_at(texts: Sequence[str], symbols: Sequence[str], values: Dict[str, object]) -> List[RatFun]:
    return [a.substitute(values) for a in parse_args(texts, symbols)]


def check_identification(
    catalog: Catalog, ident: Identification, samples: int = 3, seed: int = 0, limits: Limits = DEFAULT_LIMITS
) -> IsoCheck:
    left = catalog.entry(ident.variety, ident.left)
    right = catalog.entry(ident.variety, ident.right)
    names = ident.symbols
    if ident.equal or ident.matrix is not None:
        lc = entry_constants(left, parse_args(ident.left_args, names))
        rc = entry_constants(right, parse_args(ident.right_args, names))
        if ident.matrix is not None:
            m = BasisMatrix.of([[parse_ratfun(x, names) for x in r] for r in ident.matrix])
            lc = list(change_basis(lc, m))
        diffs = tuple(f"{k}: {a - b}" for k, (a, b) in enumerate(zip(lc, rc)) if a != b)
        return IsoCheck(ident.id, "identification", not diffs, ("symbolic",), diffs)
    nonzero = entry_exclusions(left, parse_args(ident.left_args, names)) + entry_exclusions(right, parse_args(ident.right_args, names))
    try:
        points = sample_assignments(names, samples, seed, lambda v: is_admissible(v, nonzero), special=False)
    except SamplingError as exc:
        return IsoCheck(ident.id, "identification", False, (), (str(exc),))
    labels, failures = [], []
    for values in points:
        a = instantiate(left, _args_at(ident.left_args, names, values))
        b = instantiate(right, _args_at(ident.right_args, names, values))
        labels.append(_label(values))
        try:
            if not are_isomorphic(a, b, limits):
                failures.append(f"not isomorphic at {_label(values)}")
        except ResourceLimit as exc:
            failures.append(f"{_label(values)}: {exc}")
    return IsoCheck(ident.id, "identification", not failures, tuple(labels), tuple(failures))


def _identified(variety: str, id: str, a: Dict[str, object], b: Dict[str, object], params: Sequence[str]) -> bool:
    """Whether a stated identification maps the member at ``a`` to the member at ``b``."""
    for ident in STATED_IDENTIFICATIONS:
        if ident.variety != variety or ident.left != id or ident.right != id:
            continue
        for x, y in ((a, b), (b, a)):
            image = _args_at(ident.right_args, ident.symbols, dict(zip(ident.symbols, [x[p] for p in params])))
            if all(img == RatFun.coerce(y[p]) for img, p in zip(image, params)):
                return True
    return False


def check_family_distinct(
    catalog: Catalog, variety: str, id: str, samples: int = 3, seed: int = 0, limits: Limits = DEFAULT_LIMITS
) -> IsoCheck:
    """Members at distinct sampled parameters are pairwise non-isomorphic."""
    entry = catalog.entry(variety, id)
    params = entry.params
    check_id = f"{variety}:{id}*"
    nonzero = entry_exclusions(entry, [RatFun.var(p) for p in params])
    try:
        points = sample_assignments(params, samples, seed, lambda v: is_admissible(v, nonzero), special=False)
    except SamplingError as exc:
        return IsoCheck(check_id, "distinct", False, (), (str(exc),))
    members = [instantiate(entry, [RatFun.coerce(v[p]) for p in params]) for v in points]
    failures = []
    for (i, a), (j, b) in itertools.combinations(enumerate(points), 2):
        if _identified(variety, id, a, b, params):
            continue
        try:
            if are_isomorphic(members[i], members[j], limits):
                failures.append(f"isomorphic at {_label(a)} and {_label(b)}")
        except ResourceLimit as exc:
            failures.append(f"{_label(a)} vs {_label(b)}: {exc}")
    return IsoCheck(check_id, "distinct", not failures, tuple(_label(v) for v in points), tuple(failures))


def isomorphism_suite(catalog: Catalog, samples: int = 3, seed: int = 0, limits: Limits = DEFAULT_LIMITS) -> List[IsoCheck]:
    out = [check_identification(catalog, x, samples, seed, limits) for x in STATED_IDENTIFICATIONS if x.variety in catalog.variety_names()]
    for variety, ids in NONISOMORPHIC_FAMILIES:
        if variety not in catalog.variety_names():
            continue
        out.extend(check_family_distinct(catalog, variety, i, samples, seed, limits) for i in ids)
    return out

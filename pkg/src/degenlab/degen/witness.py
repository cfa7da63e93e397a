"""Verification of parametrised-basis degeneration witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.structure import COORDINATES, BasisMatrix, SingularBasis, change_basis
from ..catalog.models import Catalog, Radical, WitnessRow
from ..exact import PoleAtZero, Poly, RatFun, format_number, limit_at_zero
from ..exact.expr import parse_poly, parse_ratfun
from .instances import entry_constants, entry_exclusions, is_admissible, parse_args
from .sampling import SamplingError, sample_assignments

T = "t"


class MismatchAt(ValueError):
    """A limiting structure constant differs from the target's."""

    def __init__(self, coordinate: str, got: object, expected: object) -> None:
        super().__init__(f"{coordinate}: limit {got} but target has {expected}")
        self.coordinate = coordinate
        self.got = got
        self.expected = expected


class UnsolvedParameter(ValueError):
    """A target parameter marked for solving is not determined linearly by the limits."""


@dataclass(frozen=True)
class DegenCertificate:
    row: str
    limits: Tuple[str, ...]
    genericity: Tuple[str, ...]
    solved: Tuple[Tuple[str, str], ...]
    samples: Tuple[Tuple[Tuple[str, str], ...], ...]
    basis: Tuple[Tuple[str, str], Tuple[str, str]]


@dataclass(frozen=True)
class WitnessOutcome:
    row: WitnessRow
    status: str  # pass | errata-candidate | fail
    certificate: Optional[DegenCertificate] = None
    error: str = ""
    repaired: Optional[WitnessRow] = None

    @property
    def verified(self) -> bool:
        return self.status in ("pass", "errata-candidate")


def radical_bindings(radicals: Sequence[Radical], names: Sequence[str]) -> Dict[str, RatFun]:
    """Solve each ``radicand = root^2`` for its ``solve_for`` symbol (must appear linearly)."""
    out: Dict[str, RatFun] = {}
    for rad in radicals:
        eq = parse_poly(rad.radicand, names) - Poly.var(rad.root) ** 2
        coeffs = eq.coefficients_in(rad.solve_for)
        if set(coeffs) != {0, 1}:
            raise ValueError(f"radicand {rad.radicand} is not linear in {rad.solve_for}")
        out[rad.solve_for] = -RatFun(coeffs[0]) / RatFun(coeffs[1])
    return out


def _apply(values: Dict[str, RatFun], r: RatFun) -> RatFun:
    return r.substitute(values) if values else r


def _solve_linear(diffs: Sequence[RatFun], name: str) -> RatFun:
    for d in diffs:
        coeffs = d.num.coefficients_in(name)
        if set(coeffs) in ({0, 1}, {1}):
            a = RatFun(coeffs[1])
            b = RatFun(coeffs.get(0, Poly.const(0)))
            return -b / a
    raise UnsolvedParameter(f"no limit coordinate determines {name} linearly")


class _Prepared:
    """Source constants, basis and target constants of a row as rational functions."""

    def __init__(self, catalog: Catalog, row: WitnessRow) -> None:
        self.row = row
        names = (T,) + tuple(row.symbols)
        rad = radical_bindings(row.radicals, names)
        self.source = catalog.entry(row.variety, row.source)
        self.target = catalog.entry(row.variety, row.target)
        src_args = [_apply(rad, a) for a in parse_args(row.source_args, names)]
        tgt_args = [_apply(rad, a) for a in parse_args(row.target_args, names)]
        for a in tgt_args:
            if T in a.indeterminates:
                raise ValueError(f"target argument {a} depends on t")
        self.src_args, self.tgt_args = src_args, tgt_args
        self.source_consts = entry_constants(self.source, src_args)
        self.target_consts = entry_constants(self.target, tgt_args)
        self.matrix = [[_apply(rad, parse_ratfun(x, names)) for x in r] for r in row.basis]
        self.conditions = [_apply(rad, parse_ratfun(c, names)) for c in row.conditions]
        self.conditions += entry_exclusions(self.target, tgt_args)
        src_excl = entry_exclusions(self.source, src_args)
        # a source exclusion is only a sampling condition when free of t
        self.conditions += [e for e in src_excl if T not in e.indeterminates]
        self.symbols = tuple(s for s in row.symbols if s not in rad)


def _limits(prep: _Prepared, matrix) -> Tuple[List[RatFun], List[Poly]]:
    m = BasisMatrix.of(matrix)
    transformed = change_basis(prep.source_consts, m)
    lims, denoms = [], []
    for c in transformed:
        lims.append(c.generic_limit(T))
        if not c.is_zero():
            d = c.limit_denominator(T)
            if not d.is_constant():
                denoms.append(d)
    return lims, denoms


def _compare(lims: Sequence[RatFun], target: Sequence[RatFun]) -> None:
    for name, got, want in zip(COORDINATES, lims, target):
        if got != want:
            raise MismatchAt(name, got, want)


def _verify_sample(prep: _Prepared, matrix, values: Dict[str, object], solved: Dict[str, RatFun]) -> None:
    """Specialise every symbol first, then take limits in ``t`` alone."""
    m = [[x.substitute(values) for x in r] for r in matrix]
    src = [c.substitute(values) for c in prep.source_consts]
    transformed = change_basis(src, BasisMatrix.of(m))
    tgt = [_apply(solved, c).substitute(values) for c in prep.target_consts]
    for name, c, want in zip(COORDINATES, transformed, tgt):
        got = limit_at_zero(c, T)
        if RatFun.coerce(got) != want:
            raise MismatchAt(name, got, want)


def verify_degeneration(
    catalog: Catalog,
    row: WitnessRow,
    samples: int = 2,
    seed: int = 0,
    basis: Optional[Sequence[Sequence[str]]] = None,
) -> DegenCertificate:
    """Check a witness exactly; raises PoleAtZero, SingularBasis or MismatchAt on failure.

    Limits are taken with the row's symbols generic; the low-order
    denominators met on the way become genericity conditions, and the
    same check is repeated with the symbols specialised at admissible
    samples.
    """
    if basis is not None:
        row = replace(row, basis=tuple(tuple(r) for r in basis))
    prep = _Prepared(catalog, row)
    lims, denoms = _limits(prep, prep.matrix)
    target = list(prep.target_consts)
    solved: Dict[str, RatFun] = {}
    for name in row.solve:
        diffs = [_apply(solved, tc) - lim for tc, lim in zip(target, lims)]
        diffs = [d for d in diffs if name in d.indeterminates]
        value = _solve_linear(diffs, name)
        solved[name] = value
    target = [_apply(solved, c) for c in target]
    _compare(lims, target)
    nonzero = list(prep.conditions) + [RatFun(d) for d in denoms]
    nonzero += [RatFun(v.den) for v in solved.values() if not v.den.is_constant()]
    taken: List[Dict[str, object]] = []
    if prep.symbols:
        try:
            taken = sample_assignments(prep.symbols, samples, seed, lambda v: is_admissible(v, nonzero), special=False)
        except SamplingError:
            taken = []
        for values in taken:
            _verify_sample(prep, prep.matrix, values, solved)
    return DegenCertificate(
        row=row.id,
        limits=tuple(str(x) for x in lims),
        genericity=tuple(sorted({str(d) for d in denoms})),
        solved=tuple((k, str(v)) for k, v in solved.items()),
        samples=tuple(tuple((k, format_number(v)) for k, v in s.items()) for s in taken),
        basis=tuple(tuple(r) for r in row.basis),
    )


def _modifications(entry: str, names: Optional[Sequence[str]]) -> List[str]:
    if entry.strip() in ("0", ""):
        return []
    out = [f"-({entry})", f"({entry})*t", f"({entry})/t"]
    if names is not None:
        out = [str(parse_ratfun(x, names)) for x in out]
    return out


def repair_candidates(basis: Sequence[Sequence[str]], depth: int = 2, names: Optional[Sequence[str]] = None):
    """Bases obtained by at most ``depth`` sign flips or t-power shifts of single entries.

    With ``names`` given, the modified entries are printed in normal form.
    """
    cells = [(i, j) for i in range(2) for j in range(2)]
    options = {c: _modifications(basis[c[0]][c[1]], names) for c in cells}
    for k in range(1, depth + 1):
        for chosen in itertools.combinations(cells, k):
            for mods in itertools.product(*(options[c] for c in chosen)):
                new = [list(r) for r in basis]
                for (i, j), text in zip(chosen, mods):
                    new[i][j] = text
                yield tuple(tuple(r) for r in new)


def check_witness(catalog: Catalog, row: WitnessRow, samples: int = 2, seed: int = 0, repair: bool = True) -> WitnessOutcome:
    """Verify a row; on failure search for a repaired basis and report it alongside."""
    try:
        cert = verify_degeneration(catalog, row, samples, seed)
        return WitnessOutcome(row, "pass", cert)
    except (PoleAtZero, SingularBasis, MismatchAt, UnsolvedParameter, ZeroDivisionError) as exc:
        error = f"{type(exc).__name__}: {exc}"
    if repair:
        for basis in repair_candidates(row.basis, names=(T,) + tuple(row.symbols)):
            try:
                cert = verify_degeneration(catalog, row, samples, seed, basis=basis)
            except (PoleAtZero, SingularBasis, MismatchAt, UnsolvedParameter, ZeroDivisionError):
                continue
            return WitnessOutcome(row, "errata-candidate", cert, error, replace(row, basis=basis, origin="repaired"))
    return WitnessOutcome(row, "fail", None, error)

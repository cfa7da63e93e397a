"""Buchberger's algorithm over Q(i) with the normal selection strategy.

Pairs are pruned with the coprime-leading-term criterion and the
Gebauer-Moeller update.  The result is the reduced, monic Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..exact import Poly
from ..exact.scalar import Scalar, number
from . import kernel as _k

Dense = Dict[Tuple[int, ...], object]


class ResourceLimit(RuntimeError):
    """A configured cap on the Groebner computation was exceeded."""


@dataclass(frozen=True)
class Limits:
    max_pairs: int = 20000
    max_basis: int = 1500
    max_degree: int = 40


DEFAULT_LIMITS = Limits()


class MonomialOrder:
    """Graded reverse lexicographic order, optionally refined into blocks.

    With blocks ``(b1, b2, ...)`` the first ``b1`` variables form the first
    block; monomials are compared by grevlex on the first block, ties broken
    by grevlex on the next, and so on (a product order).
    """

    def __init__(self, nvars: int, blocks: Optional[Sequence[int]] = None) -> None:
        blocks = tuple(blocks) if blocks else (nvars,)
        if sum(blocks) != nvars or any(b <= 0 for b in blocks):
            raise ValueError(f"block sizes {blocks} do not partition {nvars} variables")
        self.nvars = nvars
        self.blocks = blocks
        self.tag = "grevlex" if len(blocks) == 1 else "block-grevlex" + str(list(blocks))
        self._cache: Dict[Tuple[int, ...], tuple] = {}
        self._ncache: Dict[Tuple[int, ...], tuple] = {}

    def key(self, m: Tuple[int, ...]) -> tuple:
        k = self._cache.get(m)
        if k is None:
            parts: List[int] = []
            start = 0
            for b in self.blocks:
                seg = m[start:start + b]
                parts.append(sum(seg))
                parts.extend(-e for e in reversed(seg))
                start += b
            k = tuple(parts)
            self._cache[m] = k
        return k

    def negkey(self, m: Tuple[int, ...]) -> tuple:
        k = self._ncache.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._ncache[m] = k
        return k

    def leading(self, terms: Dense) -> Tuple[int, ...]:
        return max(terms, key=self.key)


def _clean(c):
    if isinstance(c, Scalar):
        return number(c)
    return c


def _monic(terms: Dense, order: MonomialOrder) -> Tuple[Tuple[int, ...], Dense]:
    lead = order.leading(terms)
    lc = terms[lead]
    if lc == 1:
        return lead, {m: _clean(c) for m, c in terms.items()}
    inv = 1 / lc
    return lead, {m: _clean(c * inv) for m, c in terms.items()}


@dataclass
class _Basis:
    order: MonomialOrder
    polys: List[Tuple[Tuple[int, ...], Dense]] = field(default_factory=list)
    reducers: List[Tuple[Tuple[int, ...], Dense]] = field(default_factory=list)

    def append(self, poly: Tuple[Tuple[int, ...], Dense]) -> None:
        lead, terms = poly
        tail = dict(terms)
        del tail[lead]
        self.polys.append(poly)
        self.reducers.append((lead, tail))

    def reducer(self, idx: int):
        return self.reducers[idx]


def _spoly(f, g) -> Dense:
    """S-polynomial of two monic polynomials given as (lead, tail)."""
    lf, tf = f
    lg, tg = g
    lcm = _k.mono_lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = _k.mul_term(tf, sf, 1)
    for m, c in _k.mul_term(tg, sg, 1).items():
        v = out.get(m)
        if v is None:
            out[m] = -c
        else:
            v = v - c
            if v == 0:
                del out[m]
            else:
                out[m] = v
    return out


def groebner_dense(
    polys: Sequence[Dense],
    order: MonomialOrder,
    limits: Limits = DEFAULT_LIMITS,
) -> List[Tuple[Tuple[int, ...], Dense]]:
    """Reduced monic Groebner basis of dense polynomials (list of (lead, terms))."""
    nv = order.nvars
    unit = tuple([0] * nv)
    basis = _Basis(order)
    active: List[int] = []
    pairs: List[Tuple[int, int]] = []
    lcm_cache: Dict[Tuple[int, int], Tuple[int, ...]] = {}

    def lead(i):
        return basis.polys[i][0]

    def lcm_of(i, j):
        key = (i, j) if i < j else (j, i)
        v = lcm_cache.get(key)
        if v is None:
            v = _k.mono_lcm(lead(i), lead(j))
            lcm_cache[key] = v
        return v

    def update(h: int) -> None:
        nonlocal active, pairs
        lh = lead(h)
        cand = list(active)
        keep: List[int] = []
        while cand:
            g1 = cand.pop(0)
            l1 = lcm_of(h, g1)
            if _k.mono_coprime(lh, lead(g1)):
                keep.append(g1)
                continue
            dominated = False
            for g2 in cand + keep:
                if _k.mono_divides(lcm_of(h, g2), l1):
                    dominated = True
                    break
            if not dominated:
                keep.append(g1)
        new_pairs = [(g, h) for g in keep if not _k.mono_coprime(lh, lead(g))]
        survivors = []
        for (a, b) in pairs:
            lab = lcm_of(a, b)
            if _k.mono_divides(lh, lab) and lcm_of(a, h) != lab and lcm_of(b, h) != lab:
                continue
            survivors.append((a, b))
        pairs = survivors + new_pairs
        active = [g for g in active if not _k.mono_divides(lh, lead(g))] + [h]

    def add(terms: Dense) -> int:
        basis.append(_monic(terms, order))
        if len(basis.polys) > limits.max_basis:
            raise ResourceLimit(f"basis size exceeded {limits.max_basis}")
        return len(basis.polys) - 1

    def current_reducers():
        return [basis.reducer(i) for i in active]

    # seed: inter-reduce the input in increasing order of leading monomial
    seeds = [dict((m, number(c)) for m, c in p.items() if c != 0) for p in polys]
    seeds = [s for s in seeds if s]
    seeds.sort(key=lambda s: order.key(order.leading(s)))
    for s in seeds:
        rem, _ = _k.normal_form(s, current_reducers(), order.negkey)
        if not rem:
            continue
        h = add(rem)
        if lead(h) == unit:
            return [basis.polys[h]]
        update(h)

    processed = 0
    while pairs:
        # normal strategy: smallest lcm in the monomial order
        best = min(range(len(pairs)), key=lambda k: order.key(lcm_of(*pairs[k])))
        i, j = pairs.pop(best)
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimit(f"more than {limits.max_pairs} S-pairs")
        if sum(lcm_of(i, j)) > limits.max_degree:
            raise ResourceLimit(f"S-pair degree exceeds {limits.max_degree}")
        s = _spoly(basis.reducer(i), basis.reducer(j))
        if not s:
            continue
        rem, _ = _k.normal_form(s, current_reducers(), order.negkey)
        if not rem:
            continue
        h = add(rem)
        if lead(h) == unit:
            return [basis.polys[h]]
        update(h)

    return _reduce(basis, active, order)


def _reduce(basis: _Basis, active: List[int], order: MonomialOrder):
    """Minimal, then fully inter-reduced, monic basis sorted by leading monomial."""
    gens = [basis.polys[i] for i in active]
    gens = [g for g in gens if not any(h is not g and _k.mono_divides(h[0], g[0]) and h[0] != g[0] for h in gens)]
    # drop duplicates of equal leading monomial (keep first)
    seen = set()
    uniq = []
    for g in gens:
        if g[0] in seen:
            continue
        seen.add(g[0])
        uniq.append(g)
    uniq.sort(key=lambda g: order.key(g[0]))
    out = []
    for idx, (lead, terms) in enumerate(uniq):
        others = []
        for jdx, (l2, t2) in enumerate(uniq):
            if jdx == idx:
                continue
            tail = dict(t2)
            del tail[l2]
            others.append((l2, tail))
        tail = dict(terms)
        del tail[lead]
        rem, _ = _k.normal_form(tail, others, order.negkey)
        rem[lead] = terms[lead]
        out.append((lead, {m: _clean(c) for m, c in rem.items()}))
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of an ideal in named variables."""

    variables: Tuple[str, ...]
    polys: Tuple[Poly, ...]
    order: str
    _dense: Tuple[Tuple[Tuple[int, ...], Dense], ...] = field(repr=False, compare=False)
    _order_obj: MonomialOrder = field(repr=False, compare=False)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and not self.polys[0].is_zero()

    def _reducers(self):
        out = []
        for lead, terms in self._dense:
            tail = dict(terms)
            del tail[lead]
            out.append((lead, tail))
        return out

    def reduce(self, p: Poly) -> Poly:
        """Normal form of ``p`` (which must use only basis variables)."""
        dense = p.exponent_terms(self.variables)
        rem, _ = _k.normal_form(dense, self._reducers(), self._order_obj.negkey)
        return Poly.from_exponents(self.variables, rem)

    def contains(self, p: Poly) -> bool:
        return self.reduce(p).is_zero()

    def leading_monomials(self) -> List[Tuple[int, ...]]:
        return [lead for lead, _ in self._dense]

    def __len__(self) -> int:
        return len(self.polys)


def to_dense(polys: Sequence[Poly], variables: Sequence[str]) -> List[Dense]:
    return [p.exponent_terms(variables) for p in polys]


def groebner(
    polys: Sequence[Poly],
    variables: Sequence[str],
    blocks: Optional[Sequence[int]] = None,
    limits: Limits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    variables = tuple(variables)
    order = MonomialOrder(len(variables), blocks)
    dense = groebner_dense(to_dense(polys, variables), order, limits)
    named = tuple(Poly.from_exponents(variables, t) for _, t in dense)
    return GroebnerBasis(variables, named, order.tag, tuple(dense), order)

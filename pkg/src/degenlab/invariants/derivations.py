"""Derivations, orbit dimensions and cheap isomorphism invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.structure import CIRC, DIM, DOT, StructurePair, flat_index
from ..exact import Poly, Q
from .linalg import nullspace, rank

Matrix = Tuple[Tuple[object, object], Tuple[object, object]]


@dataclass(frozen=True)
class DerivationSpace:
    """``D(e_i) = sum_j basis[k][i][j] e_j`` for each basis element ``k``."""

    dimension: int
    basis: Tuple[Matrix, ...]


def derivation_rows(consts: Sequence[object]) -> List[List[object]]:
    """Coefficient rows of the derivation equations in the unknowns ``d_kl`` (index ``2k+l``).

    Entries are of whatever ring the constants live in (numbers or Poly).
    """
    rows: List[List[object]] = []
    for prod in (DOT, CIRC):
        tab = consts[8 * prod: 8 * prod + 8]
        for i in range(DIM):
            for j in range(DIM):
                for l in range(DIM):
                    row = [0] * 4
                    # D(e_i e_j) coefficient on e_l: sum_k c_ij^k d_kl
                    for k in range(DIM):
                        row[2 * k + l] = row[2 * k + l] + tab[flat_index(i, j, k)]
                    # minus D(e_i) e_j + e_i D(e_j): sum_p d_ip c_pj^l + sum_q d_jq c_iq^l
                    for p in range(DIM):
                        row[2 * i + p] = row[2 * i + p] - tab[flat_index(p, j, l)]
                    for q in range(DIM):
                        row[2 * j + q] = row[2 * j + q] - tab[flat_index(i, q, l)]
                    rows.append(row)
    return rows


def _concrete_constants(s: StructurePair) -> List[object]:
    if not s.is_concrete():
        raise ValueError("derivation_space needs all parameters substituted")
    return [p.constant_value() if not p.is_zero() else Q(0) for p in s.constants()]


def derivation_space(s: StructurePair) -> DerivationSpace:
    rows = derivation_rows(_concrete_constants(s))
    rows = [r for r in rows if any(x != 0 for x in r)]
    kernel = nullspace(rows, 4)
    basis = tuple(((v[0], v[1]), (v[2], v[3])) for v in kernel)
    return DerivationSpace(len(kernel), basis)


def orbit_dimension(s: StructurePair) -> int:
    return DIM * DIM - derivation_space(s).dimension


def generic_orbit_dimension(s: StructurePair, seed: int = 0, trials: int = 3) -> int:
    """Orbit dimension at a generic parameter value.

    The rank of the parameter-polynomial matrix is the maximum of the ranks
    at random rational specialisations; a few trials make an accidental
    drop vanishingly unlikely.
    """
    if s.is_concrete():
        return orbit_dimension(s)
    rng = random.Random(seed)
    rows = derivation_rows(list(s.constants()))
    best = 0
    for _ in range(trials):
        values = {}
        for name in s.params.names:
            values[name] = Q(rng.randint(-97, 97), rng.randint(1, 13))
        if not s.params.admits(values):
            continue
        numeric = [[Poly.coerce(x).evaluate(values) if isinstance(x, Poly) else x for x in r] for r in rows]
        best = max(best, rank(numeric))
    return best


def verify_derivation(s: StructurePair, d: Matrix) -> bool:
    """Check the Leibniz rule for ``d`` on every basis pair and both products."""
    consts = _concrete_constants(s)
    rows = derivation_rows(consts)
    v = [d[0][0], d[0][1], d[1][0], d[1][1]]
    return all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@dataclass(frozen=True)
class CheapInvariants:
    dot_commutative: bool
    dot_anticommutative: bool
    circ_commutative: bool
    circ_anticommutative: bool
    dot_rank: int
    circ_rank: int
    square_dimension: int
    annihilator_dimension: int
    dot_nilpotent: bool
    circ_nilpotent: bool


def _table(s: StructurePair, prod: int) -> List[object]:
    return [p.constant_value() if not p.is_zero() else Q(0) for p in s.table(prod)]


def _image_rows(tab: Sequence[object]) -> List[List[object]]:
    return [[tab[flat_index(i, j, 0)], tab[flat_index(i, j, 1)]] for i in range(DIM) for j in range(DIM)]


def _annihilator_rows(tab: Sequence[object]) -> List[List[object]]:
    """Rows of the conditions ``x*e_j = 0`` and ``e_j*x = 0`` on ``x = x1 e1 + x2 e2``."""
    rows = []
    for j in range(DIM):
        for k in range(DIM):
            rows.append([tab[flat_index(0, j, k)], tab[flat_index(1, j, k)]])
            rows.append([tab[flat_index(j, 0, k)], tab[flat_index(j, 1, k)]])
    return rows


def _nilpotent(tab: Sequence[object]) -> bool:
    """Whether every product of three elements vanishes (nilpotency in dimension 2)."""
    s = StructurePair.from_constants(list(tab) + [0] * 8)
    basis = [[Poly.const(1), Poly.const(0)], [Poly.const(0), Poly.const(1)]]
    level = [b for b in basis]
    for _ in range(2):
        nxt = []
        for u in level:
            for b in basis:
                for x, y in ((u, b), (b, u)):
                    w = s.multiply(DOT, x, y)
                    if not all(c.is_zero() for c in w):
                        nxt.append(w)
        level = nxt
        if not level:
            return True
    return not level


def cheap_invariants(s: StructurePair) -> CheapInvariants:
    dot, circ = _table(s, DOT), _table(s, CIRC)

    def sym(tab, sign):
        return all(tab[flat_index(i, j, k)] == sign * tab[flat_index(j, i, k)] for i in range(DIM) for j in range(DIM) for k in range(DIM))

    dot_img, circ_img = _image_rows(dot), _image_rows(circ)
    return CheapInvariants(
        dot_commutative=sym(dot, 1),
        dot_anticommutative=sym(dot, -1),
        circ_commutative=sym(circ, 1),
        circ_anticommutative=sym(circ, -1),
        dot_rank=rank(dot_img),
        circ_rank=rank(circ_img),
        square_dimension=rank(dot_img + circ_img),
        annihilator_dimension=DIM - rank(_annihilator_rows(dot) + _annihilator_rows(circ)),
        dot_nilpotent=_nilpotent(dot),
        circ_nilpotent=_nilpotent(circ),
    )

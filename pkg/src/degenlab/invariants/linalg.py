"""Exact Gaussian elimination over Q(i)."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from ..exact.scalar import number


def rref(rows: Sequence[Sequence[object]]) -> Tuple[List[List[object]], List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[number(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [number(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [number(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int) -> List[List[object]]:
    """Basis of ``{x : rows * x = 0}``, one vector per free column."""
    if not rows:
        return [[number(1) if i == j else number(0) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [number(0)] * ncols
        v[f] = number(1)
        for r, p in enumerate(pivots):
            v[p] = number(-red[r][f])
        basis.append(v)
    return basis

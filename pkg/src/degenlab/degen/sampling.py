"""Deterministic parameter samples that respect non-vanishing conditions."""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Mapping, Sequence

from ..exact import Q

MAIN_POOL = (Q(-1), Q(1, 3), Q(2), Q(5, 2), Q(3), Q(7))
SPECIAL_VALUES = (Q(0), Q(1))
RESERVE_POOL = (Q(-2), Q(4), Q(3, 2), Q(-1, 2), Q(11), Q(5))

Assignment = Dict[str, object]


class SamplingError(RuntimeError):
    """No admissible sample could be drawn from the pools."""


def sample_assignments(
    symbols: Sequence[str],
    count: int = 3,
    seed: int = 0,
    accept: Callable[[Mapping[str, object]], bool] = lambda _: True,
    special: bool = True,
) -> List[Assignment]:
    """Admissible assignments giving each symbol at least ``count`` distinct values.

    Candidates come from the main pool (shuffled per symbol with ``seed``),
    then the reserve pool; rejected candidates are skipped, never reused.
    With ``special`` the values 0 and 1 are added for each symbol whenever
    the resulting assignment is admissible.
    """
    symbols = tuple(symbols)
    if not symbols:
        if not accept({}):
            raise SamplingError("the empty assignment is not admissible")
        return [{}]
    rng = random.Random(seed)
    orders = []
    for _ in symbols:
        main = list(MAIN_POOL)
        rng.shuffle(main)
        reserve = list(RESERVE_POOL)
        rng.shuffle(reserve)
        orders.append(main + reserve)
    chosen: List[Assignment] = []
    seen_values = {s: set() for s in symbols}
    width = len(orders[0])
    # diagonal sweep: candidate (k, shift) pairs symbol i with orders[i][(k + i*shift) % width]
    for shift in range(width):
        for k in range(width):
            if all(len(v) >= count for v in seen_values.values()):
                break
            cand = {s: orders[i][(k + i * shift) % width] for i, s in enumerate(symbols)}
            # only useful if it adds a new value for some symbol
            if cand in chosen or not any(cand[s] not in seen_values[s] for s in symbols):
                continue
            if not accept(cand):
                continue
            chosen.append(cand)
            for s in symbols:
                seen_values[s].add(cand[s])
    if not all(len(v) >= count for v in seen_values.values()):
        raise SamplingError(f"could not find {count} admissible values for each of {list(symbols)}")
    if special:
        base = chosen[0]
        for s in symbols:
            for v in SPECIAL_VALUES:
                cand = dict(base)
                cand[s] = v
                if cand not in chosen and accept(cand):
                    chosen.append(cand)
    return chosen

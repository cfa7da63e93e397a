"""Pure-Python reduction kernel over dense exponent tuples.

A polynomial is a dict ``{exponent tuple: coefficient}``; a reducer is a
pair ``(leading monomial, tail terms)`` with leading
coefficient one.  ``negkey`` maps a monomial to a key whose natural order
is the reverse of the monomial order, so ``heapq`` pops the largest term.
"""

from __future__ import annotations

import heapq

IMPLEMENTATION = "python"


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def mul_term(terms, shift, coeff):
    """``coeff * x^shift * terms`` as a new dict."""
    out = {}
    for m, c in terms.items():
        out[tuple([x + y for x, y in zip(m, shift)])] = c * coeff
    return out


def normal_form(terms, reducers, negkey, full=True):
    """Reduce ``terms`` modulo monic ``reducers``.

    ``reducers`` is a sequence of ``(lead, tail)`` with ``tail`` a dict.
    With ``full=False`` only the leading term is reduced (top reduction).
    Returns ``(remainder dict, number of reduction steps)``.
    """
    p = dict(terms)
    heap = [(negkey(m), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        red = None
        for lead, tail in reducers:
            ok = True
            for x, y in zip(lead, m):
                if x > y:
                    ok = False
                    break
            if ok:
                red = (lead, tail)
                break
        if red is None:
            rem[m] = p.pop(m)
            if not full:
                for mm, cc in p.items():
                    rem[mm] = cc
                return rem, steps
            continue
        steps += 1
        lead, tail = red
        del p[m]
        shift = [y - x for x, y in zip(lead, m)]
        for gm, gc in tail.items():
            nm = tuple([x + y for x, y in zip(gm, shift)])
            v = p.get(nm)
            if v is None:
                p[nm] = -(c * gc)
                heapq.heappush(heap, (negkey(nm), nm))
            else:
                v = v - c * gc
                if v == 0:
                    del p[nm]
                else:
                    p[nm] = v
    return rem, steps

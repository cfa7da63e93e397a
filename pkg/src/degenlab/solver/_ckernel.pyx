# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; same contract as ``_pykernel``."""

import heapq

IMPLEMENTATION = "cython"


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long>a[i] + <long>b[i] for i in range(n)])


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = a[i]
        y = b[i]
        out.append(x if x > y else y)
    return tuple(out)


def mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] and <long>b[i]:
            return False
    return True


def mul_term(dict terms, shift, coeff):
    cdef tuple s = tuple(shift)
    cdef Py_ssize_t i, n = len(s)
    cdef dict out = {}
    cdef tuple m
    for m, c in terms.items():
        out[tuple([<long>m[i] + <long>s[i] for i in range(n)])] = c * coeff
    return out


cdef inline bint _divides(tuple a, tuple b, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def normal_form(terms, reducers, negkey, bint full=True):
    cdef dict p = dict(terms)
    cdef list heap = [(negkey(m), m) for m in p]
    heapq.heapify(heap)
    cdef dict rem = {}
    cdef long steps = 0
    cdef list reds = [(lead, tail) for lead, tail in reducers]
    cdef Py_ssize_t n = 0, i
    cdef tuple m, lead, nm, gm
    cdef dict tail
    cdef list shift
    cdef bint found
    if p:
        n = len(next(iter(p)))
    while heap:
        m = heapq.heappop(heap)[1]
        c = p.get(m)
        if c is None:
            continue
        found = False
        for lead, tail in reds:
            if _divides(lead, m, n):
                found = True
                break
        if not found:
            rem[m] = p.pop(m)
            if not full:
                rem.update(p)
                return rem, steps
            continue
        steps += 1
        del p[m]
        shift = [<long>m[i] - <long>lead[i] for i in range(n)]
        for gm, gc in tail.items():
            nm = tuple([<long>gm[i] + <long>shift[i] for i in range(n)])
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

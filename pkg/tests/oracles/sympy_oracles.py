"""Independent oracles built on sympy; they share no code with the package's solvers."""

import itertools
import random

import sympy

from degenlab.algebra import CIRC, DOT, flat_index


def _tables(pair):
    out = []
    for prod in (DOT, CIRC):
        tab = {}
        for i, j, k in itertools.product(range(2), repeat=3):
            p = pair.constant(prod, i, j, k)
            tab[(i, j, k)] = sympy.Rational(0) if p.is_zero() else sympy.Rational(str(p.constant_value()))
        out.append(tab)
    return out


def derivation_dimension(pair) -> int:
    """dim Der by sympy row reduction of D(xy) = D(x)y + xD(y) written out from scratch."""
    d = sympy.Matrix(2, 2, sympy.symbols("d0:4"))
    eqs = []
    for tab in _tables(pair):

        def mul(u, v, tab=tab):
            return [sum(u[p] * v[q] * tab[(p, q, k)] for p in range(2) for q in range(2)) for k in range(2)]

        def D(u):
            return [sum(u[p] * d[p, k] for p in range(2)) for k in range(2)]

        e = [[1, 0], [0, 1]]
        for i, j in itertools.product(range(2), repeat=2):
            lhs = D(mul(e[i], e[j]))
            rhs = [a + b for a, b in zip(mul(D(e[i]), e[j]), mul(e[i], D(e[j])))]
            eqs.extend(sympy.expand(a - b) for a, b in zip(lhs, rhs))
    eqs = [q for q in eqs if q != 0]
    if not eqs:
        return 4
    m, _ = sympy.linear_eq_to_matrix(eqs, list(d))
    return 4 - m.rank()


def grid_has_solution(equations, inequations, variables, grid):
    """Brute force over a finite grid of rational points."""
    for point in itertools.product(grid, repeat=len(variables)):
        env = dict(zip(variables, point))
        if all(p.evaluate(env) == 0 for p in equations) and all(q.evaluate(env) != 0 for q in inequations):
            return env
    return None


def random_system(rng: random.Random, nvars: int, grid):
    """A random system, half of them planted with a grid solution."""
    from degenlab.exact import Poly, Q

    names = ("x", "y", "z")[:nvars]
    xs = [Poly.var(n) for n in names]
    planted = rng.random() < 0.5
    point = [rng.choice(grid) for _ in names]
    eqs = []
    for _ in range(rng.randint(1, 3)):
        p = Poly.const(0)
        for _ in range(rng.randint(1, 3)):
            term = Poly.const(Q(rng.randint(-3, 3)))
            for x in xs:
                term = term * x ** rng.randint(0, 2)
            p = p + term
        if planted:
            p = p - Poly.const(p.evaluate(dict(zip(names, point))))
        if not p.is_zero():
            eqs.append(p)
    ineqs = []
    if rng.random() < 0.3:
        q = xs[0] - Poly.const(Q(rng.choice(grid)))
        if not planted or q.evaluate(dict(zip(names, point))) != 0:
            ineqs.append(q)
    return names, eqs, ineqs, (dict(zip(names, point)) if planted else None)


def sympy_groebner_is_unit(equations, inequations, variables) -> bool:
    gens = sympy.symbols(" ".join(variables) + " zz_")
    gens = gens if isinstance(gens, tuple) else (gens,)
    polys = [sympy.sympify(str(p).replace("^", "**")) for p in equations]
    if inequations:
        prod = sympy.Integer(1)
        for q in inequations:
            prod *= sympy.sympify(str(q).replace("^", "**"))
        polys.append(gens[-1] * prod - 1)
    if not polys:
        return False
    g = sympy.groebner(polys, *gens, order="grevlex")
    return list(g.exprs) == [1]

"""The seven acceptance criteria at exact tolerance; each prints one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) to get the seven lines
without pytest.
"""

import itertools
import random
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from degenlab.algebra import CIRC, ParamSpec, StructurePair, VarietyIdentity, check_variety, expand_identity, flat_index  # noqa: E402
from degenlab.algebra.varieties import JACOBI  # noqa: E402
from degenlab.catalog import builtin_catalog  # noqa: E402
from degenlab.cli.suites import Context, dimension_records  # noqa: E402
from degenlab.degen import isomorphism_suite  # noqa: E402
from degenlab.exact import Poly, Q  # noqa: E402
from degenlab.geometry import irreducible_components  # noqa: E402
from degenlab.invariants import derivation_space  # noqa: E402
from degenlab.solver import PolySystem, is_empty_over_C  # noqa: E402
from oracles.samples import concrete_instances  # noqa: E402
from oracles.sympy_oracles import derivation_dimension, grid_has_solution, random_system, sympy_groebner_is_unit  # noqa: E402

LEDGER = "/root/notes/decisions.md"

REQUIRED_IDS = {
    "leibniz-poisson": [f"L{k}" for k in range(1, 8)],
    "transposed-leibniz-poisson": [f"T{k}" for k in range(1, 9)],
    "novikov-poisson": [f"N{k:02d}" for k in range(1, 15)],
    "comm-pre-lie": [f"C{k:02d}" for k in range(1, 18)],
    "anti-pre-lie-poisson": [f"A{k:02d}" for k in range(1, 19)],
    "pre-poisson": ["P09", "P10"],
    "zinbiel": ["Z1"],
    "comm-assoc": ["A01", "A02", "A03", "A04"],
}

# rows per witness table as transcribed; (variety, group) -> count
TABLE_ROWS = {
    ("leibniz-poisson", "primary"): 4,
    ("leibniz-poisson", "family"): 3,
    ("transposed-leibniz-poisson", "primary"): 9,
    ("transposed-leibniz-poisson", "family"): 2,
    ("novikov-poisson", "primary"): 17,
    ("novikov-poisson", "family"): 12,  # see ledger: np-family-rows
    ("comm-pre-lie", "primary"): 27,
    ("comm-pre-lie", "family"): 9,
    ("anti-pre-lie-poisson", "primary"): 33,
    ("anti-pre-lie-poisson", "family"): 27,
    ("pre-poisson", "primary"): 2,
}

CLAIMED_COMPONENTS = {
    "leibniz-poisson": {"L3", "L4", "L5*", "L6*"},
    "transposed-leibniz-poisson": {"T3", "T4", "T5*"},
    "anti-pre-lie-poisson": {"A05", "A10*", "A11*"},
    "novikov-poisson": {"N07*", "N08*"},
    "transposed-poisson": {"T3", "T5*"},
    "pre-lie-poisson": {"P02", "P01*", "N07*", "N08*"},
    "comm-pre-lie": {"C07", "C09", "C11", "C13", "C14", "C05*", "C06*", "C10*", "C12*", "C15*", "C17*"},
    "pre-poisson": {"P07", "P08", "P10", "P05*", "P06*"},
}

FIGURE_LEVELS = {
    "leibniz-poisson": {"L4": 4, "L2": 3, "L5": 3, "L6": 3, "L1": 2, "L3": 2, "L7": 2, "C8": 0},
    "transposed-leibniz-poisson": {"T3": 4, "T4": 4, "T5": 3, "T6": 3, "T8": 3, "T1": 2, "T2": 2, "T7": 2, "C8": 0},
}


_CATALOG = None


def _catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = builtin_catalog()
    return _CATALOG


def _emit(n, ok, detail, capsys=None):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


# criteria -------------------------------------------------------------------------


def criterion_1():
    cat = _catalog()
    start = time.perf_counter()
    missing = [f"{v}:{i}" for v, ids in REQUIRED_IDS.items() for i in ids if i not in {e.id for e in cat.entries_of(v)}]
    failing = []
    for e in cat.entries:
        rep = check_variety(e.pair, cat.variety(e.variety))
        if not rep.passed:
            failing.append(f"{e.variety}:{e.id}")
    elapsed = time.perf_counter() - start
    ok = not missing and not failing and elapsed < 10
    return ok, f"identities: {len(cat.entries)} entries, {len(failing)} failing, {len(missing)} missing, {elapsed:.1f}s"


def criterion_2():
    cat = _catalog()
    start = time.perf_counter()
    outcomes = Context(cat, seed=0, samples=3, threads=1).outcomes(cat.variety_names())
    elapsed = time.perf_counter() - start
    counts = Counter((w.variety, w.group) for w in cat.witnesses if w.origin == "table")
    bad_counts = {k: (counts.get(k, 0), n) for k, n in TABLE_ROWS.items() if counts.get(k, 0) != n}
    table = [o for o in outcomes.values() if o.row.origin == "table"]
    verified = sum(o.status == "pass" for o in table)
    covered = sum(o.verified for o in outcomes.values())
    ok = not bad_counts and verified >= 0.95 * len(table) and covered == len(outcomes) and elapsed < 60
    detail = f"degenerations: {verified}/{len(table)} table rows as transcribed, {covered}/{len(outcomes)} verified or repaired, {elapsed:.1f}s"
    if bad_counts:
        detail += f", row counts differ {bad_counts}"
    return ok, detail


def criterion_3():
    cat = _catalog()
    start = time.perf_counter()
    certs = Context(cat, seed=0, samples=3, threads=1).certificates(cat.variety_names())
    elapsed = time.perf_counter() - start
    thin = []
    for row in cat.nondegen:
        cert = certs[row.id]
        for spec in row.targets:
            symbols = tuple(dict.fromkeys(tuple(row.closed_set.params) + tuple(spec.symbols)))
            checks = [dict(c.sample) for c in cert.checks if c.target == spec.id]
            checks = [c for c in checks if set(symbols) <= set(c)]
            for s in symbols:
                if len({c[s] for c in checks}) < 3:
                    thin.append(f"{row.id}/{spec.id}/{s}")
    failing = sorted(k for k, c in certs.items() if not c.certified)
    ok = not failing and not thin and elapsed < 300
    return ok, f"non-degenerations: {len(certs) - len(failing)}/{len(certs)} certified {failing}, {len(thin)} under-sampled, {elapsed:.1f}s"


def criterion_4():
    cat = _catalog()
    start = time.perf_counter()
    records = dimension_records(Context(cat, seed=0, samples=3, threads=1))
    elapsed = time.perf_counter() - start
    failing = [r.id for r in records if r.status != "pass"]
    wrong = []
    for v, levels in FIGURE_LEVELS.items():
        drawn = {n.entry: n.level for n in cat.figure(v).nodes}
        if drawn != levels:
            wrong.append(v)
    ok = not failing and not wrong and elapsed < 5
    return ok, f"dimensions: {len(records) - len(failing)}/{len(records)} figure nodes match, {elapsed:.1f}s"


def criterion_5():
    cat = _catalog()
    ctx = Context(cat, seed=0, samples=3, threads=1)
    wrong = {}
    for v, claimed in CLAIMED_COMPONENTS.items():
        rep = irreducible_components(ctx.graph(v), sorted(claimed), strict=False)
        if set(rep.components) != claimed or not rep.consistent:
            wrong[v] = sorted(set(rep.components) ^ claimed)
    ok = not wrong
    return ok, f"components: {len(CLAIMED_COMPONENTS) - len(wrong)}/{len(CLAIMED_COMPONENTS)} varieties reproduce the claim; differences {wrong}"


def criterion_6():
    cat = _catalog()
    checks = isomorphism_suite(cat, samples=3, seed=0)
    failing = [c.id for c in checks if not c.passed]
    kinds = Counter(c.kind for c in checks)
    ok = not failing and len(checks) == 35
    return ok, f"isomorphisms: {len(checks) - len(failing)}/{len(checks)} decisions {dict(kinds)}"


def _anticommutative_jacobi():
    a, b = Poly.var("a"), Poly.var("b")
    zero = Poly.const(0)
    circ = [zero] * 8
    circ[flat_index(0, 1, 0)], circ[flat_index(0, 1, 1)] = a, b
    circ[flat_index(1, 0, 0)], circ[flat_index(1, 0, 1)] = -a, -b
    pair = StructurePair((zero,) * 8, tuple(circ), ParamSpec(("a", "b")))
    law = VarietyIdentity.parse(JACOBI)
    return all(r.is_zero() for args in itertools.product(range(2), repeat=3) for r in expand_identity(pair, law, args)) and pair.constant(CIRC, 0, 1, 0) == a


def criterion_7():
    rng = random.Random(20240101)
    grid = (Q(-1), Q(0), Q(1), Q(2))
    disagreements = 0
    for _ in range(50):
        names, eqs, ineqs, point = random_system(rng, rng.randint(1, 3), grid)
        empty = is_empty_over_C(PolySystem(names, eqs, ineqs))
        found = grid_has_solution(eqs, ineqs, names, grid)
        if (found is not None and empty) or (point is not None and found is None) or empty != sympy_groebner_is_unit(eqs, ineqs, names):
            disagreements += 1
    cat = _catalog()
    instances = list(concrete_instances(cat, count=3))
    der_bad = [f"{e.variety}:{e.id}" for e, _, p in instances if derivation_space(p).dimension != derivation_dimension(p)]
    jac = _anticommutative_jacobi()
    ok = disagreements == 0 and not der_bad and jac
    return ok, f"oracles: {50 - disagreements}/50 systems agree, {len(instances) - len(der_bad)}/{len(instances)} derivation dimensions agree, Jacobi {'holds' if jac else 'fails'}"


# pytest entry points ------------------------------------------------------------------


def test_criterion_1_identities(capsys):
    assert _emit(1, *criterion_1(), capsys)


def test_criterion_2_degenerations(capsys):
    assert _emit(2, *criterion_2(), capsys)


@pytest.mark.xfail(strict=True, reason=f"C17* row meets C05^0; see {LEDGER} [cpl-c17-nondegen]")
def test_criterion_3_nondegenerations(capsys):
    assert _emit(3, *criterion_3(), capsys)


def test_criterion_4_dimensions(capsys):
    assert _emit(4, *criterion_4(), capsys)


@pytest.mark.xfail(strict=True, reason=f"C17* dominated and A06* undominated; see {LEDGER} [cpl-components] [apl-components]")
def test_criterion_5_components(capsys):
    assert _emit(5, *criterion_5(), capsys)


def test_criterion_6_isomorphisms(capsys):
    assert _emit(6, *criterion_6(), capsys)


def test_criterion_7_oracles(capsys):
    assert _emit(7, *criterion_7(), capsys)


def test_criterion_5_holds_outside_the_two_recorded_varieties(context):
    for v, claimed in CLAIMED_COMPONENTS.items():
        if v in ("comm-pre-lie", "anti-pre-lie-poisson"):
            continue
        rep = irreducible_components(context.graph(v), sorted(claimed))
        assert set(rep.components) == claimed, v


def test_criterion_5_recorded_differences(context):
    cpl = irreducible_components(context.graph("comm-pre-lie"))
    assert set(CLAIMED_COMPONENTS["comm-pre-lie"]) - set(cpl.components) == {"C17*"}
    assert set(cpl.components) <= CLAIMED_COMPONENTS["comm-pre-lie"]
    apl = irreducible_components(context.graph("anti-pre-lie-poisson"))
    assert set(apl.components) - CLAIMED_COMPONENTS["anti-pre-lie-poisson"] == {"A06*"}


def test_criterion_3_single_failure(certificates):
    assert sorted(k for k, c in certificates.items() if not c.certified) == ["comm-pre-lie:C17*-/->"]


if __name__ == "__main__":
    results = [_emit(n, *fn()) for n, fn in enumerate((criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7), 1)]
    sys.exit(0 if all(results) else 1)

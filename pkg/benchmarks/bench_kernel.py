"""Compare the compiled and pure-Python reduction kernels on the same workload.

Each kernel runs in its own interpreter (the choice is made at import) on
the non-degeneration suite of the built-in catalog, which is dominated by
Groebner emptiness tests.  Usage: ``python3 benchmarks/bench_kernel.py [repeats]``.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from degenlab.catalog import builtin_catalog
from degenlab.degen import verify_nondegeneration
from degenlab.solver import kernel
cat = builtin_catalog()
t = time.perf_counter()
ok = sum(verify_nondegeneration(cat, r).certified for r in cat.nondegen)
print(json.dumps({"impl": kernel.IMPLEMENTATION, "seconds": time.perf_counter() - t, "certified": ok}))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("DEGENLAB_PURE_PYTHON", None)
    if pure:
        env["DEGENLAB_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    best = {}
    for pure in (True, False):
        runs = [run(pure) for _ in range(repeats)]
        impls = {r["impl"] for r in runs}
        fastest = min(runs, key=lambda r: r["seconds"])
        best[fastest["impl"]] = fastest
        if len({r["certified"] for r in runs}) != 1 or len(impls) != 1:
            raise SystemExit("kernel runs disagree")
    for impl, r in sorted(best.items()):
        print(f"{impl:>8}: {r['seconds']:.3f} s (best of {repeats}), {r['certified']} rows certified")
    if "cython" not in best:
        print("compiled kernel not built; only the pure-Python kernel was measured")
    else:
        print(f" speedup: {best['python']['seconds'] / best['cython']['seconds']:.2f}x")
        if best["python"]["certified"] != best["cython"]["certified"]:
            raise SystemExit("kernels disagree on the number of certified rows")


if __name__ == "__main__":
    main()

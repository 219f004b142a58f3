"""Benchmark the compiled scan kernels against the pure-Python fallback.

Times ``check_bicategory`` — whose law scans dominate — on twisted group
bicategories of growing size, once per backend (backend selection happens at
import, so each measurement runs in a fresh interpreter).

Usage: python3 benchmarks/bench_kernels.py [--sizes 8,16,24] [--reps 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

SNIPPET = """
import json, sys, time
from bicatkit.bicat import check_bicategory, group_cocycle_bicategory
from bicatkit.kernels import IMPLEMENTATION
n, reps = int(sys.argv[1]), int(sys.argv[2])
bic = group_cocycle_bicategory(n, lambda i, j, k: 1)
bic.arena()  # build the integer tables outside the timed region
best = None
for _ in range(reps):
    t0 = time.perf_counter()
    rep = check_bicategory(bic)
    dt = time.perf_counter() - t0
    best = dt if best is None else min(best, dt)
    assert rep.ok
print(json.dumps({"impl": IMPLEMENTATION, "seconds": best}))
"""


def measure(n: int, reps: int, pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["BICATKIT_PURE"] = "1"
    else:
        env.pop("BICATKIT_PURE", None)
    out = subprocess.run([sys.executable, "-c", SNIPPET, str(n), str(reps)],
                         capture_output=True, text=True, env=env, check=True)
    return json.loads(out.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,16,24",
                        help="comma-separated group orders to test")
    parser.add_argument("--reps", type=int, default=3,
                        help="repetitions per measurement (best is kept)")
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'n':>4} {'1-cells':>8} {'2-cells':>8} {'compiled':>10} "
          f"{'pure':>10} {'speedup':>8}")
    for n in sizes:
        fast = measure(n, args.reps, pure=False)
        slow = measure(n, args.reps, pure=True)
        if fast["impl"] != "compiled":
            print(f"{n:>4}  (compiled backend unavailable; "
                  f"both runs used {fast['impl']})")
        ratio = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(f"{n:>4} {n:>8} {2 * n:>8} {fast['seconds']:>9.3f}s "
              f"{slow['seconds']:>9.3f}s {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

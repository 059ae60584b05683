#!/usr/bin/env python3
"""Benchmark the matching-scan kernels: compiled extension vs pure Python.

The scan enumerates every k-subset of the candidate window and keeps the
subsets whose greedy caps match the target diagram, so the candidate count
grows like C(window, k).  Run from the repository root:

    python3 benchmarks/bench_matching.py
"""

from __future__ import annotations

import math
import time

from kacdecomp import _matchscan_py, from_spec
from kacdecomp.diagrams import _scan_inputs

try:
    from kacdecomp import _matchscan as _compiled
except ImportError:
    _compiled = None

CASES = [
    ("two crosses", from_spec({2, 3})),
    ("cored example", from_spec({9, 6, 5, 1, 0}, {7}, {3})),
    ("staircase k=5", from_spec(range(2, 11, 2))),
    ("staircase k=6", from_spec(range(2, 13, 2))),
    ("wide, two cores", from_spec({0, 2, 4, 6, 8, 10}, {-5}, {-8})),
]


def time_scan(fn, args, repeat=3):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    if _compiled is None:
        print("compiled kernel not built; timing the pure scan only")
    header = f"{'case':<16} {'window':>6} {'subsets':>9} {'matches':>7} "
    header += f"{'pure':>9} {'compiled':>9} {'speedup':>8}"
    print(header)
    for name, f in CASES:
        window, k, table_lo, syms = _scan_inputs(f)
        subsets = math.comb(len(window), k)
        t_pure, r_pure = time_scan(
            _matchscan_py.scan_matching, (window, k, table_lo, syms)
        )
        row = f"{name:<16} {len(window):>6} {subsets:>9} {len(r_pure):>7} "
        row += f"{t_pure * 1e3:>7.1f}ms "
        if _compiled is not None:
            t_fast, r_fast = time_scan(
                _compiled.scan_matching, (window, k, table_lo, syms)
            )
            assert r_fast == r_pure, f"kernels disagree on {name}"
            row += f"{t_fast * 1e3:>7.1f}ms {t_pure / t_fast:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()

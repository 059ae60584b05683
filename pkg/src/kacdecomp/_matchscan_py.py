"""Pure-Python matching scan; same contract as the compiled kernel.

``scan_matching(window, k, table_lo, syms)`` enumerates every k-subset of
``window`` (a strictly decreasing list of non-core positions), builds its
caps greedily largest-cross-first, and keeps the subsets whose caps all join
a cross of the target diagram to a circle.  ``syms`` is the target's symbol
table over positions ``table_lo .. table_lo+len(syms)-1`` with codes
0=circle, 1=cross, 2/3=core; positions beyond the table are circles.

The subset iteration order (lexicographic on window indices) makes the output
come out in decreasing lexicographic order on cross tuples, which is the
package-wide canonical order.  Occupancy is tracked with a stamp array so no
per-candidate clearing is needed.
"""

from __future__ import annotations

from itertools import combinations


def scan_matching(
    window: list[int], k: int, table_lo: int, syms: bytes
) -> list[tuple[int, ...]]:
    if k <= 0:
        raise ValueError("scan needs at least one cross")
    size = len(syms)
    stamp = [0] * size
    cur = 0
    out = []
    for combo in combinations(window, k):
        cur += 1
        ok = True
        for c in combo:  # decreasing order: largest cross first
            i = c - table_lo
            stamp[i] = cur
            j = i + 1
            while syms[j] >= 2 or stamp[j] == cur:
                j += 1
            stamp[j] = cur
            # cap (c, d) must join a cross and a circle of the target
            if syms[i] + syms[j] != 1:
                ok = False
                break
        if ok:
            out.append(combo)
    return out

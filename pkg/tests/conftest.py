"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import pytest

from kacdecomp import Symbol, WeightDiagram, from_spec, l_value
from kacdecomp.rng import Lcg, random_symbol_sets


def fab(a: int, b: int) -> WeightDiagram:
    """Core-free diagram with the two crosses a < b."""
    assert a < b
    return from_spec({a, b})


@pytest.fixture
def worked():
    """The running example: crosses (9,6,5,1,0), core ({7},{3})."""
    return from_spec({9, 6, 5, 1, 0}, {7}, {3})


def stack_caps(f: WeightDiagram) -> set[tuple[int, int]]:
    """Independent cap oracle: left-to-right scan pairing each free position
    with the most recent unmatched cross (classic non-crossing pairing).

    Deliberately a different algorithm from the greedy decreasing-cross
    construction in the library.
    """
    core = f.core_left | f.core_right
    if not f.crosses:
        return set()
    caps: set[tuple[int, int]] = set()
    stack: list[int] = []
    p = min(f.crosses)
    while stack or p <= max(f.crosses):
        if p in core:
            p += 1
            continue
        if p in f.crosses:
            stack.append(p)
        elif stack:
            caps.add((stack.pop(), p))
        p += 1
    return caps


def naive_legal_ends(f: WeightDiagram, a: int, margin: int = 6) -> list[tuple[int, int]]:
    """Brute-force legal ends straight from the definition, scanning well
    below the support to double-check nothing is missed down there."""
    out = []
    for b in range(a - 1, min(f.support) - margin, -1):
        if f.symbol(b) != Symbol.CIRCLE:
            continue
        if all(l_value(f, b, c) >= 0 for c in range(b + 1, a + 1)):
            out.append((b, l_value(f, b, a)))
    return out


def random_diagrams(
    count: int,
    seed: int,
    max_crosses: int,
    lo: int,
    hi: int,
    max_core: int = 4,
) -> list[WeightDiagram]:
    gen = Lcg(seed)
    out = []
    for _ in range(count):
        crosses, left, right = random_symbol_sets(gen, lo, hi, max_crosses, max_core)
        out.append(from_spec(crosses, left, right))
    return out

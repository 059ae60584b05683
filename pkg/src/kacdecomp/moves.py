"""Legal moves on weight diagrams and the signed move operators.

A cross at ``a`` may move to a circle at ``b < a`` when the running tally
stays non-negative: walking right from ``b`` with tally 0, add one per cross
and subtract one per circle (core symbols count as neither); the move is
legal when the tally never goes negative before reaching ``a``, and its
*weight* is the tally just before ``a``.

``sigma(i, s)`` moves the i-th largest cross of every term through all its
legal moves, with sign ``(-1)^weight``.  The product
``(1 + sigma_1) ... (1 + sigma_k)`` applied to a diagram (rightmost factor
first) expands the Kac module indexed by it into simple factors; the other
two routes to the same answer live in :mod:`kacdecomp.diagrams`
(exhaustive matching) and :mod:`kacdecomp.decomp` (cancelation-free
recursion).

``legal_ends_recursive`` recomputes the legal ends of a cross from a small
system of rewriting rules that never inspects tallies, and serves as an
independent oracle for the sweep in ``legal_ends``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import DiagramSum, Symbol, WeightDiagram
from .errors import (
    AtypicalityTooSmall,
    BadInterval,
    NotACircle,
    NotACross,
    NotCoreFree,
)

_TALLY = {Symbol.CROSS: 1, Symbol.CIRCLE: -1, Symbol.GREATER: 0, Symbol.LESS: 0}


@dataclass(frozen=True)
class LegalMove:
    """A legal move: the cross at ``start`` relocates to ``end`` < start."""

    start: int
    end: int
    weight: int

    def __post_init__(self):
        assert self.end < self.start and self.weight >= 0


def l_value(f: WeightDiagram, b: int, a: int) -> int:
    """Crosses minus circles strictly between ``b`` and ``a`` (b < a)."""
    if b >= a:
        raise BadInterval(f"need b < a, got b={b}, a={a}")
    crosses = sum(1 for c in f.crosses if b < c < a)
    occupied = sum(1 for p in f.support if b < p < a)
    circles = (a - b - 1) - occupied
    return crosses - circles


def legal_ends(f: WeightDiagram, a: int) -> list[tuple[int, int]]:
    """All ``(end, weight)`` pairs of legal moves starting at the cross ``a``.

    Single right-to-left sweep: with S(p) the tally over the open interval
    (p, a), position p is a legal end exactly when it carries a circle and
    S(p) is a running maximum of the suffix tallies seen so far.  Positions
    below min(support) - 1 are all circles, so S only falls there and the
    sweep can stop; no window parameter is needed.
    """
    if f.symbol(a) != Symbol.CROSS:
        raise NotACross(f"no cross at {a}")
    out = []
    tally = 0
    best: int | None = None
    for p in range(a - 1, min(f.support) - 2, -1):
        sym = f.symbol(p)
        if sym == Symbol.CIRCLE and (best is None or tally >= best):
            out.append((p, tally))
        best = tally if best is None else max(best, tally)
        tally += _TALLY[sym]
    return out


def apply_move(f: WeightDiagram, a: int, b: int) -> WeightDiagram:
    """Relocate the cross at ``a`` to the circle at ``b``; core untouched.

    No legality check: this is the raw relocation, also used to walk moves
    backwards.
    """
    if f.symbol(a) != Symbol.CROSS:
        raise NotACross(f"no cross at {a}")
    if f.symbol(b) != Symbol.CIRCLE:
        raise NotACircle(f"position {b} is not empty")
    return f.with_crosses((f.crosses - {a}) | {b})


def sigma(i: int, s: DiagramSum | WeightDiagram) -> DiagramSum:
    """Signed sum over the legal moves of the i-th largest cross, extended
    linearly.  ``i`` is 1-based; every term needs at least ``i`` crosses."""
    if i < 1:
        raise ValueError("operator index is 1-based")
    if isinstance(s, WeightDiagram):
        s = DiagramSum.basis(s)
    acc: dict[WeightDiagram, int] = {}
    for f, coeff in s.items():
        if f.atypicality < i:
            raise AtypicalityTooSmall(
                f"term {f} has {f.atypicality} crosses, operator index is {i}"
            )
        a = f.cross_list[i - 1]
        for b, w in legal_ends(f, a):
            g = apply_move(f, a, b)
            c = acc.get(g, 0) + coeff * (-1) ** w
            if c:
                acc[g] = c
            elif g in acc:
                del acc[g]
    return DiagramSum(acc)


def sigma_product(f: WeightDiagram) -> DiagramSum:
    """Evaluate ``(1 + sigma_1) ... (1 + sigma_k) f`` with k = #crosses.

    Factors apply right to left (sigma_k first); each operator re-reads the
    i-th largest cross of the term it acts on.  For k = 0 this is the empty
    product, i.e. just ``f``.
    """
    s = DiagramSum.basis(f)
    for i in range(f.atypicality, 0, -1):
        s = s + sigma(i, s)
    return s


def legal_ends_recursive(f: WeightDiagram, a: int, i: int) -> set[int]:
    """The ends of weight-``i`` legal moves from the cross ``a``, computed by
    rewriting rules only (independent oracle for :func:`legal_ends`).

    Rules, writing f' for f with the cross at ``a`` slid to ``a-1``:

    * circle at a-1, i > 0:   ends(f, a, i) = ends(f', a-1, i+1)
    * circle at a-1, i = 0:   ends(f, a, 0) = ends(f', a-1, 1) + {a-1}
    * cross at a-1:           ends(f, a, 0) is empty, and for i > 0
                              ends(f, a, i) = ends(f minus a, a-1, i-1)

    When ``a`` is the minimal cross everything below it is circles, which is
    the one-cross situation: the only legal end is a-1, at weight 0.  That
    is the base case; it also makes the slide rules terminate.
    """
    if not f.is_core_free:
        raise NotCoreFree("recursive legal ends are defined for core-free diagrams")
    if f.symbol(a) != Symbol.CROSS:
        raise NotACross(f"no cross at {a}")
    if i < 0:
        raise ValueError("weight must be nonnegative")
    return _lm(f, a, i)


def _lm(f: WeightDiagram, a: int, i: int) -> set[int]:
    if a == min(f.crosses):
        return {a - 1} if i == 0 else set()
    if f.symbol(a - 1) == Symbol.CIRCLE:
        slid = apply_move(f, a, a - 1)
        if i > 0:
            return _lm(slid, a - 1, i + 1)
        return _lm(slid, a - 1, 1) | {a - 1}
    if i == 0:
        return set()
    return _lm(f.with_crosses(f.crosses - {a}), a - 1, i - 1)

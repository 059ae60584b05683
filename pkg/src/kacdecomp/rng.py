"""Deterministic random generator for replayable verification runs.

The generator is pinned down exactly so that a failing randomized case can be
replayed from its seed by any implementation, in any language:

    state'  = (6364136223846793005 * state + 1442695040888963407) mod 2^64
    output  = state' >> 32                     (top 32 bits, unsigned)
    below(n)= (output * n) >> 32               (uniform in 0..n-1)

The multiplier/increment pair is the common 64-bit LCG used by MMIX.  Batch
helpers below build random diagrams with a documented, fixed draw order.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator with 32-bit outputs."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next32(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state >> 32

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next32() * n) >> 32

    def in_range(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def distinct_positions(self, count: int, lo: int, hi: int) -> list[int]:
        """Draw `count` distinct positions from [lo, hi] by rejection.

        Draw order is part of the replay contract: positions are appended in
        the order first produced by the generator.
        """
        if count > hi - lo + 1:
            raise ValueError("window too small for the requested draw")
        out: list[int] = []
        seen = set()
        while len(out) < count:
            p = self.in_range(lo, hi)
            if p not in seen:
                seen.add(p)
                out.append(p)
        return out


def random_symbol_sets(
    gen: Lcg, lo: int, hi: int, max_crosses: int, max_core: int = 4
) -> tuple[list[int], list[int], list[int]]:
    """Symbol positions for one random diagram, in the fixed draw order:

    1. k = below(max_crosses + 1) crosses
    2. c = below(max_core + 1) core symbols, below(c + 1) of them on the left
    3. k + c distinct positions from [lo, hi]; the first k are the crosses,
       the next left-core-count carry '>', the rest carry '<'.

    Counts are clamped so k + c never exceeds the window size.
    """
    span = hi - lo + 1
    k = min(gen.below(max_crosses + 1), span)
    ncore = min(gen.below(max_core + 1), span - k)
    nleft = gen.below(ncore + 1) if ncore else 0
    positions = gen.distinct_positions(k + ncore, lo, hi)
    return (
        positions[:k],
        positions[k : k + nleft],
        positions[k + nleft :],
    )

"""Kac-module decomposition and the multiplicity matrix.

Three independent routes compute the composition-factor index set P(f) of
the Kac module indexed by a weight diagram f:

* ``sigma_product(f)``          signed operator product  (kacdecomp.moves)
* ``enumerate_matching(f)``     exhaustive cap matching  (kacdecomp.diagrams)
* ``decompose_recursive(f)``    cancelation-free recursion (this module)

``decompose`` dispatches to the recursion, which needs neither signs nor a
search window: remove the largest cross ``a``, decompose the rest, re-attach
``a`` to every factor (giving the factors whose cap at ``a`` is short), then
slide ``a`` through its legal moves in each of those and keep the results
that still match.  Each factor is produced exactly once; the no-duplicate
fact is asserted at runtime rather than assumed.

Core symbols stay in place throughout the recursion.  Deleting the core
positions from the number line is an order isomorphism of the remaining
integers that commutes with tallies, legal moves, cap construction and
matching, so the core-free correctness argument transfers verbatim.

``multiplicity_matrix`` assembles entry [K(col) : L(row)] over a finite
index built from seed diagrams.  Any atypical diagram has a proper factor of
strictly smaller cross-sum, so no finite index can be closed under
decomposition; the closure depth is therefore an explicit parameter
(``levels``), columns whose full factor set lies inside the index are
tracked, and ``invert_unitriangular(..., require_closed=True)`` refuses
truncated indices.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .diagrams import (
    DiagramSum,
    WeightDiagram,
    canonical_sorted,
    cap_diagram,
    enumerate_matching,
    from_spec,
    matches,
    parse,
    serialize,
)
from .errors import ClosureTooLarge, InvariantViolation, LengthMismatch, NotClosed
from .moves import apply_move, legal_ends, sigma_product


def decompose_recursive(f: WeightDiagram) -> list[WeightDiagram]:
    """P(f) by the cancelation-free recursion, in canonical order."""
    if f.atypicality == 0:
        return [f]
    a = f.cross_list[0]
    sub = decompose_recursive(f.with_crosses(f.crosses - {a}))
    short_capped = []
    core = f.core_left | f.core_right
    first_free = a + 1
    while first_free in core:
        first_free += 1
    for g0 in sub:
        g = g0.with_crosses(g0.crosses | {a})
        d = cap_diagram(g)
        top = next(c for c in d.caps if c.begin == a)
        if top.end != first_free or not matches(d, f):
            raise InvariantViolation(
                f"re-attaching cross {a} to {g0} broke the match against {f}"
            )
        short_capped.append(g)
    scanned = []
    for h in short_capped:
        for b, _w in legal_ends(h, a):
            g = apply_move(h, a, b)
            if matches(cap_diagram(g), f):
                scanned.append(g)
    produced = short_capped + scanned
    if len(set(produced)) != len(produced):
        raise InvariantViolation(
            f"recursive decomposition of {f} produced a factor twice"
        )
    return canonical_sorted(produced)


def decompose(f: WeightDiagram, verify: bool = False) -> list[WeightDiagram]:
    """Composition factors of the Kac module indexed by ``f`` (all with
    multiplicity one), in canonical order.

    ``verify=True`` cross-checks the recursion against the two other routes
    and raises InvariantViolation on any disagreement.
    """
    factors = decompose_recursive(f)
    if verify:
        report = verify_routes(f)
        if not report.passed:
            raise InvariantViolation(
                f"decomposition routes disagree on {f}: " + "; ".join(report.mismatches)
            )
    return factors


def predecessor(g: WeightDiagram, a: int) -> WeightDiagram | None:
    """The unique diagram with a weight-zero legal move to ``g`` starting at
    ``a``, or None when no cap of g's cap diagram ends at ``a``."""
    cap = cap_diagram(g).cap_ending_at(a)
    if cap is None:
        return None
    return g.with_crosses((g.crosses - {cap.begin}) | {a})


def toggle_caps(f: WeightDiagram, bits: Sequence[int]) -> WeightDiagram:
    """Swap cross and circle at the ends of the selected caps.

    ``bits`` has one entry per cap, indexed like the crosses in decreasing
    order; bit p set means the cap at the p-th largest cross is swapped.
    """
    caps = cap_diagram(f).caps
    if len(bits) != len(caps):
        raise LengthMismatch(f"{len(bits)} bits for {len(caps)} caps")
    crosses = set(f.crosses)
    for bit, cap in zip(bits, caps):
        if bit:
            crosses.remove(cap.begin)
            crosses.add(cap.end)
    return f.with_crosses(crosses)


def cap_spans(f: WeightDiagram) -> tuple[int, ...]:
    """end - begin of each cap, by decreasing cross.

    On the weight side these are the lexicographically smallest positive
    shifts of the shared entries that avoid entry collisions no matter which
    subset of them is applied at once; applying a subset is exactly
    :func:`toggle_caps` on the diagram side.
    """
    return tuple(c.end - c.begin for c in cap_diagram(f).caps)


def kac_modules_containing(
    f: WeightDiagram, verify: bool = False
) -> list[WeightDiagram]:
    """The 2^k Kac modules with the simple module of ``f`` as a factor:
    all cap toggles of ``f``."""
    k = f.atypicality
    out = []
    for mask in range(1 << k):
        bits = tuple((mask >> p) & 1 for p in range(k))
        out.append(toggle_caps(f, bits))
    if len(set(out)) != len(out):
        raise InvariantViolation(f"cap toggles of {f} collided")
    if verify:
        for g in out:
            if f not in decompose(g):
                raise InvariantViolation(f"{f} missing from the factors of {g}")
    return canonical_sorted(out)


# ---------------------------------------------------------------------------
# Multiplicity matrix


def matrix_order(diagrams: Iterable[WeightDiagram]) -> list[WeightDiagram]:
    """Canonical matrix index order: decreasing cross-sum, ties by the
    canonical diagram order."""
    return sorted(
        diagrams, key=lambda f: (f.cross_sum, *f.sort_key()), reverse=True
    )


@dataclass
class IndexedMatrix:
    """A square integer matrix indexed by weight diagrams."""

    index: tuple[WeightDiagram, ...]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self._pos = {f: i for i, f in enumerate(self.index)}

    def entry(self, row: WeightDiagram, col: WeightDiagram) -> int:
        return self.entries.get((self._pos[row], self._pos[col]), 0)

    def dense(self) -> list[list[int]]:
        n = len(self.index)
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def multiply(self, other: "IndexedMatrix") -> "IndexedMatrix":
        if self.index != other.index:
            raise ValueError("matrix indices differ")
        a, b = self.dense(), other.dense()
        n = len(self.index)
        out = {}
        for i in range(n):
            for j in range(n):
                v = sum(a[i][t] * b[t][j] for t in range(n))
                if v:
                    out[(i, j)] = v
        return IndexedMatrix(self.index, out)

    def is_identity(self) -> bool:
        return self.entries == {
            (i, i): 1 for i in range(len(self.index))
        }

    def column_sum(self, col: WeightDiagram) -> int:
        j = self._pos[col]
        return sum(v for (i, jj), v in self.entries.items() if jj == j)

    def to_json_obj(self) -> dict:
        return {
            "index": [serialize(f) for f in self.index],
            "entries": sorted([i, j, v] for (i, j), v in self.entries.items()),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IndexedMatrix":
        index = tuple(parse(s) for s in obj["index"])
        entries = {(i, j): v for i, j, v in obj["entries"]}
        return cls(index, entries)

    def to_csv(self) -> str:
        # serialized diagrams contain commas, so fields must be quoted
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [serialize(f) for f in self.index])
        for f, row in zip(self.index, self.dense()):
            writer.writerow([serialize(f)] + row)
        return buf.getvalue()


class MultiplicityMatrix(IndexedMatrix):
    """Decomposition numbers: entry(row g, col f) = [K(f) : L(g)].

    ``factor_sets`` keeps the full factor list of every column, including
    factors that fell outside the index; a column is *complete* when none
    did.  Unitriangularity: diagonal 1, and any other nonzero entry sits at a
    row of strictly smaller cross-sum than its column.
    """

    def __init__(self, index, entries, factor_sets):
        super().__init__(tuple(index), dict(entries))
        self.factor_sets: dict[WeightDiagram, list[WeightDiagram]] = factor_sets

    def complete_columns(self) -> list[WeightDiagram]:
        present = set(self.index)
        return [
            f for f in self.index if set(self.factor_sets[f]) <= present
        ]

    def incomplete_columns(self) -> list[WeightDiagram]:
        present = set(self.index)
        return [
            f for f in self.index if not set(self.factor_sets[f]) <= present
        ]


def multiplicity_matrix(
    seeds: Iterable[WeightDiagram],
    levels: int | None = 1,
    max_size: int = 10_000,
) -> MultiplicityMatrix:
    """Decomposition matrix over the seeds expanded ``levels`` rounds.

    Each round replaces the frontier by the factors of its members.  With
    ``levels=None`` expansion runs to a fixed point, which exists only for
    typical seeds; the ``max_size`` guard raises ClosureTooLarge otherwise.
    Every diagram of the final index gets a column filled from its factor
    list (entries to rows inside the index); columns whose factors all made
    it into the index are reported by ``complete_columns``.
    """
    all_diagrams = set(seeds)
    frontier = set(all_diagrams)
    factor_sets: dict[WeightDiagram, list[WeightDiagram]] = {}
    rounds = 0
    while frontier and (levels is None or rounds < levels):
        rounds += 1
        new: set[WeightDiagram] = set()
        for f in matrix_order(frontier):
            factor_sets[f] = decompose(f)
            new |= set(factor_sets[f])
        new -= all_diagrams
        if len(all_diagrams) + len(new) > max_size:
            raise ClosureTooLarge(
                f"closure exceeded {max_size} diagrams after {rounds} rounds"
            )
        all_diagrams |= new
        frontier = new
    for f in all_diagrams:
        if f not in factor_sets:
            factor_sets[f] = decompose(f)
    index = tuple(matrix_order(all_diagrams))
    pos = {f: i for i, f in enumerate(index)}
    entries = {}
    for f in index:
        for g in factor_sets[f]:
            if g in pos:
                entries[(pos[g], pos[f])] = 1
    return MultiplicityMatrix(index, entries, factor_sets)


def invert_unitriangular_rows(rows: list[list[int]]) -> list[list[int]]:
    """Exact integer inverse of a unitriangular matrix (either orientation)."""
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        if row[i] != 1:
            raise ValueError("diagonal entries must all be 1")
    lower = all(rows[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    upper = all(rows[i][j] == 0 for i in range(n) for j in range(i))
    if not (lower or upper):
        raise ValueError("matrix is not triangular")
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    order = range(n) if lower else range(n - 1, -1, -1)
    for j in order:
        for i in order:
            if (i > j) if lower else (i < j):
                v = -sum(rows[i][t] * inv[t][j] for t in range(n) if t != i)
                inv[i][j] = v
    return inv


def invert_unitriangular(
    m: IndexedMatrix, require_closed: bool = False
) -> IndexedMatrix:
    """Exact integer inverse over the same index.

    With ``require_closed=True`` the matrix must be a MultiplicityMatrix
    whose every column kept all its factors (NotClosed otherwise): only then
    is the inverse the genuine change of basis from simple modules to Kac
    modules rather than a truncation of it.
    """
    if require_closed:
        if not isinstance(m, MultiplicityMatrix):
            raise NotClosed("closedness is only tracked for multiplicity matrices")
        missing = m.incomplete_columns()
        if missing:
            raise NotClosed(
                "columns with factors outside the index: "
                + ", ".join(serialize(f) for f in missing)
            )
    inv_rows = invert_unitriangular_rows(m.dense())
    entries = {
        (i, j): v
        for i, row in enumerate(inv_rows)
        for j, v in enumerate(row)
        if v
    }
    return IndexedMatrix(m.index, entries)


# ---------------------------------------------------------------------------
# Verification harnesses


@dataclass
class RouteReport:
    """Result of running all three decomposition routes on one diagram."""

    diagram: WeightDiagram
    passed: bool
    factors: list[WeightDiagram]
    mismatches: list[str]

    def to_json_obj(self) -> dict:
        return {
            "diagram": serialize(self.diagram),
            "passed": self.passed,
            "factors": [serialize(f) for f in self.factors],
            "mismatches": self.mismatches,
        }


def verify_routes(f: WeightDiagram) -> RouteReport:
    """Check that the operator product equals the indicator sum of the
    matching enumeration, which equals the recursive decomposition."""
    product = sigma_product(f)
    matched = enumerate_matching(f)
    recursive = decompose_recursive(f)
    mismatches = []
    indicator = DiagramSum.indicator(matched)
    if product != indicator:
        extra = product - indicator
        for g, c in extra.items():
            mismatches.append(f"operator product vs matching: {c:+d} * {serialize(g)}")
    if set(matched) != set(recursive):
        for g in set(matched) ^ set(recursive):
            side = "matching only" if g in set(matched) else "recursion only"
            mismatches.append(f"{side}: {serialize(g)}")
    return RouteReport(f, not mismatches, matched, mismatches)


def catalan_check(k: int) -> tuple[int, int, bool]:
    """Factor count of the staircase diagram with crosses 2, 4, ..., 2k-2
    against the k-th Catalan number."""
    if k < 1:
        raise ValueError("k must be positive")
    f = from_spec(range(2, 2 * k - 1, 2))
    count = len(decompose(f))
    expected = math.comb(2 * k, k) // (k + 1)
    return count, expected, count == expected


def conjecture_scan(
    k: int, lo: int, hi: int
) -> list[tuple[WeightDiagram, int]]:
    """Scan all core-free diagrams with k-1 crosses in [lo, hi] for
    violations of the Catalan bound.

    A counterexample is a diagram with more than C_k factors, or with
    exactly C_k factors whose crosses are not a translate of the staircase
    2, 4, ..., 2k-2.
    """
    if k < 1:
        raise ValueError("k must be positive")
    ck = math.comb(2 * k, k) // (k + 1)
    out = []
    for combo in combinations(range(lo, hi + 1), k - 1):
        g = from_spec(combo)
        n = len(decompose(g))
        staircase = all(b - a == 2 for a, b in zip(combo, combo[1:]))
        if n > ck or (n == ck and not staircase):
            out.append((g, n))
    return out

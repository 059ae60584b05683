"""Weight diagrams, cap diagrams, and the matching predicate.

A *weight diagram* is a function from the integers to the four symbols

    x  (cross)      o  (circle, the default)      >      <

that equals ``o`` at all but finitely many positions.  Only the non-circle
positions are stored.  The crosses encode the shared entries of a dominant
gl(m|n) weight written in shifted-tuple form, ``>`` the left-only entries and
``<`` the right-only entries; the pair (positions of ``>``, positions of
``<``) is the *core* and is constant on a block.  The number of crosses is
the degree of atypicality.

The *cap diagram* of a weight diagram is the unique non-crossing system of
arcs with one arc starting at each cross: processing crosses from the largest
down, each arc runs from its cross to the nearest free position to the right,
where positions already used by earlier arcs and positions carrying core
symbols are not free.  A cap diagram *matches* a weight diagram when the
cores agree and every arc joins a cross of the weight diagram to a circle.
The diagrams matching ``f`` index the composition factors of the Kac module
indexed by ``f``; ``enumerate_matching`` lists them by exhaustive search over
a window that provably contains every candidate cross.

The exhaustive search is the package's one hot loop.  It lives in a small
kernel with two interchangeable implementations: a compiled extension
(``kacdecomp._matchscan``, Cython) and a pure-Python fallback
(``kacdecomp._matchscan_py``).  The compiled one is preferred at import time;
set ``KACDECOMP_PURE_SCAN=1`` to force the fallback.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import InvariantViolation, OverlappingSymbols, ParseError

if os.environ.get("KACDECOMP_PURE_SCAN"):
    from . import _matchscan_py as _scan

    _SCAN_BACKEND = "pure"
else:
    try:
        from . import _matchscan as _scan  # type: ignore[no-redef]

        _SCAN_BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _matchscan_py as _scan  # type: ignore[no-redef]

        _SCAN_BACKEND = "pure"


def scan_backend() -> str:
    """Which matching-scan kernel is active: ``"compiled"`` or ``"pure"``."""
    return _SCAN_BACKEND


class Symbol(enum.Enum):
    """The four symbols a weight diagram can carry at a position."""

    CROSS = "x"
    CIRCLE = "o"
    GREATER = ">"
    LESS = "<"


# Symbol codes used by the scan kernels: circle 0, cross 1, cores 2 and 3.
_SYM_CODE = {Symbol.CIRCLE: 0, Symbol.CROSS: 1, Symbol.GREATER: 2, Symbol.LESS: 3}


@dataclass(frozen=True)
class WeightDiagram:
    """An almost-everywhere-circle symbol assignment on the integers.

    Immutable and hashable; only non-circle positions are stored.
    """

    crosses: frozenset[int] = field(default_factory=frozenset)
    core_left: frozenset[int] = field(default_factory=frozenset)
    core_right: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        object.__setattr__(self, "core_left", frozenset(self.core_left))
        object.__setattr__(self, "core_right", frozenset(self.core_right))
        overlap = (
            (self.crosses & self.core_left)
            | (self.crosses & self.core_right)
            | (self.core_left & self.core_right)
        )
        if overlap:
            raise OverlappingSymbols(
                f"positions {sorted(overlap)} carry more than one symbol"
            )

    @cached_property
    def cross_list(self) -> tuple[int, ...]:
        """Crosses in strictly decreasing order (a_1 > a_2 > ... > a_k)."""
        return tuple(sorted(self.crosses, reverse=True))

    @property
    def atypicality(self) -> int:
        return len(self.crosses)

    @property
    def core(self) -> tuple[frozenset[int], frozenset[int]]:
        return (self.core_left, self.core_right)

    @property
    def is_core_free(self) -> bool:
        return not self.core_left and not self.core_right

    @cached_property
    def support(self) -> frozenset[int]:
        return self.crosses | self.core_left | self.core_right

    @property
    def cross_sum(self) -> int:
        """|f| = sum of cross positions; strictly decreases under legal moves."""
        return sum(self.crosses)

    def symbol(self, position: int) -> Symbol:
        if position in self.crosses:
            return Symbol.CROSS
        if position in self.core_left:
            return Symbol.GREATER
        if position in self.core_right:
            return Symbol.LESS
        return Symbol.CIRCLE

    def same_core(self, other: "WeightDiagram") -> bool:
        return (
            self.core_left == other.core_left
            and self.core_right == other.core_right
        )

    def with_crosses(self, crosses: Iterable[int]) -> "WeightDiagram":
        """A diagram with the same core and the given crosses."""
        return WeightDiagram(frozenset(crosses), self.core_left, self.core_right)

    def sort_key(self) -> tuple:
        """Total order key; sorting with reverse=True gives the canonical
        decreasing-lexicographic order on cross tuples."""
        return (
            self.cross_list,
            tuple(sorted(self.core_left, reverse=True)),
            tuple(sorted(self.core_right, reverse=True)),
        )

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"WeightDiagram({serialize(self)!r})"


def from_spec(
    crosses: Iterable[int],
    core_left: Iterable[int] = (),
    core_right: Iterable[int] = (),
) -> WeightDiagram:
    """Build a diagram with crosses, ``>`` at core_left and ``<`` at core_right.

    The three sets must be pairwise disjoint (OverlappingSymbols otherwise).
    """
    return WeightDiagram(frozenset(crosses), frozenset(core_left), frozenset(core_right))


def canonical_sorted(diagrams: Iterable[WeightDiagram]) -> list[WeightDiagram]:
    """Decreasing lexicographic order on cross tuples (cores break ties)."""
    return sorted(diagrams, key=WeightDiagram.sort_key, reverse=True)


@dataclass(frozen=True, order=True)
class Cap:
    """An arc from ``begin`` to ``end`` with begin < end."""

    begin: int
    end: int

    def __post_init__(self):
        if self.begin >= self.end:
            raise InvariantViolation(f"cap must run left to right: {self}")

    def interior(self) -> range:
        return range(self.begin + 1, self.end)


@dataclass(frozen=True)
class CapDiagram:
    """A non-crossing system of caps plus core symbols.

    ``caps`` are kept in construction order, i.e. by decreasing begin.
    """

    caps: tuple[Cap, ...]
    core_left: frozenset[int] = field(default_factory=frozenset)
    core_right: frozenset[int] = field(default_factory=frozenset)

    @property
    def core(self) -> tuple[frozenset[int], frozenset[int]]:
        return (self.core_left, self.core_right)

    @property
    def begins(self) -> frozenset[int]:
        return frozenset(c.begin for c in self.caps)

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset(p for c in self.caps for p in (c.begin, c.end))

    def cap_ending_at(self, position: int) -> Cap | None:
        for c in self.caps:
            if c.end == position:
                return c
        return None

    def to_weight_diagram(self) -> WeightDiagram:
        """The unique weight diagram with crosses at the cap begins."""
        return WeightDiagram(self.begins, self.core_left, self.core_right)

    def validate(self) -> None:
        """Check the structural invariants, raising InvariantViolation.

        Deliberately brute force (all pairs, all interior positions) so it can
        serve as an independent check on the greedy construction.
        """
        core = self.core_left | self.core_right
        if self.core_left & self.core_right:
            raise InvariantViolation("core sets intersect")
        seen: set[int] = set()
        for c in self.caps:
            for p in (c.begin, c.end):
                if p in seen:
                    raise InvariantViolation(f"caps share endpoint {p}")
                if p in core:
                    raise InvariantViolation(f"cap endpoint {p} lies on a core symbol")
                seen.add(p)
        for a in self.caps:
            for b in self.caps:
                if a is b:
                    continue
                nested = (
                    (a.begin < b.begin and b.end < a.end)
                    or (b.begin < a.begin and a.end < b.end)
                )
                disjoint = a.end < b.begin or b.end < a.begin
                if not (nested or disjoint):
                    raise InvariantViolation(f"caps {a} and {b} cross")
        for c in self.caps:
            for p in c.interior():
                if p not in seen and p not in core:
                    raise InvariantViolation(
                        f"position {p} inside {c} is neither core nor cap endpoint"
                    )


def cap_diagram(f: WeightDiagram) -> CapDiagram:
    """The cap diagram of ``f``: greedy nearest-free-slot arcs.

    Crosses are processed in decreasing order; the arc from cross ``c`` ends
    at the smallest position above ``c`` that is not an endpoint of an earlier
    arc and carries no core symbol.
    """
    blocked = set(f.core_left) | set(f.core_right)
    caps = []
    for c in f.cross_list:
        blocked.add(c)
        d = c + 1
        while d in blocked:
            d += 1
        blocked.add(d)
        caps.append(Cap(c, d))
    return CapDiagram(tuple(caps), f.core_left, f.core_right)


def matches(d: CapDiagram, f: WeightDiagram) -> bool:
    """True when cores agree and every cap of ``d`` joins a cross of ``f`` to
    a circle of ``f`` (in either orientation)."""
    if d.core_left != f.core_left or d.core_right != f.core_right:
        return False
    for c in d.caps:
        pair = {f.symbol(c.begin), f.symbol(c.end)}
        if pair != {Symbol.CROSS, Symbol.CIRCLE}:
            return False
    return True


def matching_window(f: WeightDiagram) -> tuple[int, int]:
    """Inclusive position window that contains every cross of every diagram
    matching ``f``.

    No candidate cross can exceed the largest cross of ``f`` (the arc from a
    larger cross would have to land on a cross of ``f`` further right, and
    there is none).  Leftward, the arc from the smallest candidate cross
    covers only core symbols and at most 2(k-1) other arc endpoints before
    reaching a cross of ``f``, which bounds the drift by 2k + |core|.
    """
    k = f.atypicality
    if k == 0:
        raise ValueError("window undefined for diagrams without crosses")
    ncore = len(f.core_left) + len(f.core_right)
    return (min(f.support) - 2 * k - ncore, max(f.crosses))


def _scan_inputs(f: WeightDiagram) -> tuple[list[int], int, int, bytes]:
    """Kernel arguments for the matching scan over f's window: decreasing
    non-core candidate positions, cross count, and f's symbol table (sized so
    every reachable cap end is covered)."""
    k = f.atypicality
    lo, hi = matching_window(f)
    core = f.core_left | f.core_right
    window = [p for p in range(hi, lo - 1, -1) if p not in core]
    table_hi = hi + 2 * k + len(core) + 2
    syms = bytes(_SYM_CODE[f.symbol(p)] for p in range(lo, table_hi + 1))
    return window, k, lo, syms


def enumerate_matching(f: WeightDiagram) -> list[WeightDiagram]:
    """All diagrams whose cap diagram matches ``f``, by exhaustive search.

    Candidates are the k-subsets of non-core window positions; each candidate
    is tested with the literal matching predicate against freshly built caps.
    The result is in canonical order (decreasing lexicographic on crosses)
    and always contains ``f`` itself.  This is the oracle-grade route; the
    recursive route in :mod:`kacdecomp.decomp` is the fast one.
    """
    if f.atypicality == 0:
        return [f]
    window, k, table_lo, syms = _scan_inputs(f)
    found = _scan.scan_matching(window, k, table_lo, syms)
    return [f.with_crosses(t) for t in found]


# ---------------------------------------------------------------------------
# Formal sums


class DiagramSum:
    """A formal integer-linear combination of weight diagrams.

    Zero coefficients are never stored; addition and subtraction cancel
    exactly.  Instances are immutable in spirit: all arithmetic returns new
    sums.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[WeightDiagram, int] | Iterable[tuple[WeightDiagram, int]] = ()):
        acc: dict[WeightDiagram, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for diagram, coeff in items:
            c = acc.get(diagram, 0) + coeff
            if c:
                acc[diagram] = c
            elif diagram in acc:
                del acc[diagram]
        self._terms = acc

    @classmethod
    def basis(cls, f: WeightDiagram) -> "DiagramSum":
        return cls({f: 1})

    @classmethod
    def indicator(cls, diagrams: Iterable[WeightDiagram]) -> "DiagramSum":
        """Sum of the given diagrams, coefficient 1 each."""
        return cls((f, 1) for f in diagrams)

    def items(self) -> list[tuple[WeightDiagram, int]]:
        """Terms in canonical order."""
        return [
            (f, self._terms[f]) for f in canonical_sorted(self._terms)
        ]

    def coefficient(self, f: WeightDiagram) -> int:
        return self._terms.get(f, 0)

    def diagrams(self) -> list[WeightDiagram]:
        return canonical_sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[WeightDiagram]:
        return iter(canonical_sorted(self._terms))

    def __contains__(self, f: WeightDiagram) -> bool:
        return f in self._terms

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        acc = dict(self._terms)
        for f, c in other._terms.items():
            n = acc.get(f, 0) + c
            if n:
                acc[f] = n
            elif f in acc:
                del acc[f]
        return DiagramSum(acc)

    def __sub__(self, other: "DiagramSum") -> "DiagramSum":
        return self + (-1) * other

    def __neg__(self) -> "DiagramSum":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "DiagramSum":
        if scalar == 0:
            return DiagramSum()
        return DiagramSum({f: scalar * c for f, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for f, c in self.items():
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{serialize(f)}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DiagramSum({str(self)!r})"

    def to_json_obj(self) -> list[dict]:
        return [
            {"diagram": serialize(f), "coeff": c} for f, c in self.items()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "DiagramSum":
        return cls((parse(entry["diagram"]), int(entry["coeff"])) for entry in obj)


# ---------------------------------------------------------------------------
# Text serialization
#
# Canonical form: `x:a1,a2,...;gt:p1,...;lt:q1,...` with every list strictly
# decreasing, sections in that order, and empty sections omitted entirely.
# The empty diagram serializes to the empty string.

_TAGS = ("x", "gt", "lt")


def serialize(f: WeightDiagram) -> str:
    parts = []
    for tag, positions in (
        ("x", f.crosses),
        ("gt", f.core_left),
        ("lt", f.core_right),
    ):
        if positions:
            body = ",".join(str(p) for p in sorted(positions, reverse=True))
            parts.append(f"{tag}:{body}")
    return ";".join(parts)


def _parse_int(text: str, offset: int) -> int:
    body = text[1:] if text[:1] == "-" else text
    if not body or not body.isdigit():
        raise ParseError(f"expected an integer, got {text!r}", offset)
    return int(text)


def parse(text: str) -> WeightDiagram:
    """Inverse of :func:`serialize`.

    Sections must appear in canonical order (x, gt, lt), each at most once;
    the integers within a section may come in any order but must be
    distinct.  Raises ParseError with the offending character position, or
    OverlappingSymbols when the sections intersect.
    """
    if text == "":
        return WeightDiagram()
    sections: dict[str, list[int]] = {}
    offset = 0
    next_tag = 0
    for section in text.split(";"):
        tag, colon, body = section.partition(":")
        if not colon:
            raise ParseError("section lacks ':'", offset)
        while next_tag < len(_TAGS) and _TAGS[next_tag] != tag:
            next_tag += 1
        if next_tag >= len(_TAGS):
            raise ParseError(f"unknown or out-of-order section {tag!r}", offset)
        next_tag += 1
        values: list[int] = []
        pos = offset + len(tag) + 1
        for item in body.split(","):
            value = _parse_int(item, pos)
            if value in values:
                raise ParseError(f"position {value} repeated in section {tag!r}", pos)
            values.append(value)
            pos += len(item) + 1
        sections[tag] = values
        offset += len(section) + 1
    return from_spec(
        sections.get("x", ()), sections.get("gt", ()), sections.get("lt", ())
    )

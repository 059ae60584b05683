"""The oriented move graph on core-free diagrams and its signed path sums.

Vertices are core-free weight diagrams; there is an edge f -> g labeled
[s, t] for every legal move relocating the cross at s to t.  A path is
*increasing* when its edge starts strictly increase, and the signed count of
increasing paths from f to g (sign = parity of the total edge weight) equals
the coefficient of g in the operator product expansion of f.

An increasing path is *irregular* when it has a positive-weight edge or a
label chain: an edge [c, d] whose start c is the end of a later edge [b, c].
``star`` is the sign-reversing, fixed-point-free involution on irregular
paths: the irregular edge with the largest end is either merged with the
regular edge arriving at its start, or split at the cap that closes over its
start.  The regular paths it leaves uncancelled are exactly the matching
diagrams, one path each.

Every rewrite produced by ``star`` is replayed move by move and re-checked
for legality; the uniqueness facts the construction relies on raise
InvariantViolation instead of being silently assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagrams import WeightDiagram, cap_diagram, parse, serialize
from .errors import (
    CoreMismatch,
    InvariantViolation,
    NotCoreFree,
    NotIncreasing,
    NotIrregular,
)
from .moves import Symbol, apply_move, legal_ends


@dataclass(frozen=True)
class Edge:
    """A legal move as a graph edge, label [start, end]."""

    source: WeightDiagram
    target: WeightDiagram
    start: int
    end: int
    weight: int

    @property
    def label(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Path:
    """A composable edge sequence; ``source`` carries the start vertex so the
    empty path is representable."""

    source: WeightDiagram
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        at = self.source
        for e in self.edges:
            if e.source != at:
                raise InvariantViolation("path edges do not compose")
            at = e.target

    @property
    def target(self) -> WeightDiagram:
        return self.edges[-1].target if self.edges else self.source

    @property
    def labels(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.label for e in self.edges)

    @property
    def weight(self) -> int:
        return sum(e.weight for e in self.edges)

    @property
    def is_increasing(self) -> bool:
        starts = [e.start for e in self.edges]
        return all(a < b for a, b in zip(starts, starts[1:]))

    def sign(self) -> int:
        return (-1) ** self.weight

    def to_json_obj(self) -> dict:
        return {
            "from": serialize(self.source),
            "to": serialize(self.target),
            "edges": [{"s": e.start, "t": e.end, "w": e.weight} for e in self.edges],
            "regular": classify(self).regular,
        }


def path_from_json_obj(obj: dict) -> Path:
    p = build_path(parse(obj["from"]), [(e["s"], e["t"]) for e in obj["edges"]])
    if serialize(p.target) != obj["to"]:
        raise InvariantViolation("path endpoint does not match its edges")
    return p


def _require_core_free(f: WeightDiagram) -> None:
    if not f.is_core_free:
        raise NotCoreFree("the move graph is built on core-free diagrams")


def _require_pair(f: WeightDiagram, g: WeightDiagram) -> None:
    _require_core_free(f)
    _require_core_free(g)
    if f.atypicality != g.atypicality:
        raise CoreMismatch(
            f"cross counts differ: {f.atypicality} vs {g.atypicality}"
        )


def edges_from(f: WeightDiagram) -> list[Edge]:
    """All outgoing edges, by decreasing start then decreasing end."""
    _require_core_free(f)
    out = []
    for a in f.cross_list:
        for b, w in legal_ends(f, a):
            out.append(Edge(f, apply_move(f, a, b), a, b, w))
    return out


def build_path(source: WeightDiagram, labels: list[tuple[int, int]]) -> Path:
    """Replay labels from ``source``, validating each move's legality and
    recomputing its weight; InvariantViolation on any illegal step."""
    edges = []
    at = source
    for s, t in labels:
        if at.symbol(s) != Symbol.CROSS:
            raise InvariantViolation(f"no cross at {s} while replaying {labels}")
        ends = dict(legal_ends(at, s))
        if t not in ends:
            raise InvariantViolation(f"move [{s},{t}] is not legal in {at}")
        nxt = apply_move(at, s, t)
        edges.append(Edge(at, nxt, s, t, ends[t]))
        at = nxt
    return Path(source, tuple(edges))


def increasing_paths(f: WeightDiagram, g: WeightDiagram) -> list[Path]:
    """All increasing paths from f to g, sorted by label sequence.

    Depth-first search; a branch dies as soon as its cross-sum falls to or
    below that of g (every further move strictly decreases it).  Contains the
    empty path exactly when f = g.
    """
    _require_pair(f, g)
    target_sum = g.cross_sum
    results: list[Path] = []

    def walk(at: WeightDiagram, last_start: int | None, acc: list[Edge]) -> None:
        if at == g:
            results.append(Path(f, tuple(acc)))
        if at.cross_sum <= target_sum:
            return
        for e in edges_from(at):
            if last_start is None or e.start > last_start:
                acc.append(e)
                walk(e.target, e.start, acc)
                acc.pop()

    walk(f, None, [])
    results.sort(key=lambda p: p.labels)
    return results


class PathClass(NamedTuple):
    regular: bool
    first_violation: int | None  # index of the first irregular edge


def irregular_edge_indices(p: Path) -> list[int]:
    """Indices of irregular edges: positive weight, or start equal to the end
    of a later edge."""
    out = []
    for i, e in enumerate(p.edges):
        if e.weight > 0 or any(e2.end == e.start for e2 in p.edges[i + 1 :]):
            out.append(i)
    return out


def classify(p: Path) -> PathClass:
    if not p.is_increasing:
        raise NotIncreasing("classification is defined for increasing paths")
    idxs = irregular_edge_indices(p)
    return PathClass(regular=not idxs, first_violation=idxs[0] if idxs else None)


def star(p: Path) -> Path:
    """The sign-reversing involution on increasing irregular paths.

    Pick the irregular edge [s, t] with the largest end t.  If some edge
    arrives at s it is regular (an irregular one would beat t), and the pair
    { [s,t], [a,s] } merges into [a,t]; otherwise the cap ending at s in the
    diagram right after the move begins at some b in (t, s), and [s,t]
    splits into [b,t] + [s,b].  Either way the endpoints are kept, the total
    weight moves by one, and the rewritten path is replayed and re-validated.
    """
    if not p.is_increasing:
        raise NotIncreasing("the involution acts on increasing paths")
    idxs = irregular_edge_indices(p)
    if not idxs:
        raise NotIrregular("path is regular")
    ends = [p.edges[i].end for i in idxs]
    if len(set(ends)) != len(ends):
        raise InvariantViolation("two irregular edges share an end")
    pivot = max(idxs, key=lambda i: p.edges[i].end)
    s, t = p.edges[pivot].label
    arriving = [i for i, e in enumerate(p.edges) if e.end == s]
    if len(arriving) > 1:
        raise InvariantViolation(f"two edges end at {s}")
    labels = list(p.labels)
    if arriving:
        j = arriving[0]
        if j in idxs:
            raise InvariantViolation(f"edge arriving at {s} is irregular")
        a = p.edges[j].start
        labels = [lab for i, lab in enumerate(labels) if i not in (pivot, j)]
        labels.append((a, t))
    else:
        after = p.edges[pivot].target
        cap = cap_diagram(after).cap_ending_at(s)
        if cap is None or not (t < cap.begin < s):
            raise InvariantViolation(
                f"no cap over ({t}, {s}) after the pivot move in {after}"
            )
        b = cap.begin
        labels = [lab for i, lab in enumerate(labels) if i != pivot]
        labels += [(b, t), (s, b)]
    labels.sort()
    flipped = build_path(p.source, labels)
    if flipped.target != p.target or abs(flipped.weight - p.weight) != 1:
        raise InvariantViolation("involution broke endpoints or weight parity")
    if not flipped.is_increasing:
        raise InvariantViolation("involution produced a non-increasing path")
    return flipped


def path_coefficient(f: WeightDiagram, g: WeightDiagram) -> int:
    """Signed count of increasing paths from f to g."""
    return sum(p.sign() for p in increasing_paths(f, g))


def regular_paths(f: WeightDiagram, g: WeightDiagram) -> list[Path]:
    return [p for p in increasing_paths(f, g) if classify(p).regular]

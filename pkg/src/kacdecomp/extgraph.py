"""The weight-zero subgraph and first extensions between simple modules.

Deleting every positive-weight edge from the move graph leaves the quiver of
non-split extensions: Ext^1 between the simple modules of f and g is at most
one-dimensional, and nonzero exactly when one weight-zero legal move joins f
and g (in either direction).  A weight-zero move landing on g is the same
thing as a cap of g's cap diagram with the move's end points swapped, so the
in-neighbors of f are its cap toggles and the out-neighbors its weight-zero
moves.

Extensions are symmetric; the direction tags ``out`` (f -> g) and ``in``
(g -> f) preserve the quiver orientation for callers that want it.  Diagrams
in different blocks (different core or cross count) have no extensions, so
``ext_dim`` simply returns 0 for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagrams import WeightDiagram, cap_diagram, parse, serialize
from .errors import InvariantViolation
from .moves import apply_move, legal_ends


@dataclass(frozen=True)
class ExtEdge:
    """A weight-zero legal move as an edge of the extension quiver."""

    source: WeightDiagram
    target: WeightDiagram
    start: int
    end: int


class ExtNeighbor(NamedTuple):
    diagram: WeightDiagram
    direction: str  # "out": edge f -> diagram; "in": edge diagram -> f


def ext_dim(f: WeightDiagram, g: WeightDiagram) -> int:
    """dim Ext^1 between the simple modules indexed by f and g: 0 or 1.

    Two diagrams joined by a legal move differ in exactly two positions, so
    the candidate move is unique and only its legality and weight need
    checking.
    """
    if f == g:
        return 0
    if not f.same_core(g) or f.atypicality != g.atypicality:
        return 0
    only_f = f.crosses - g.crosses
    only_g = g.crosses - f.crosses
    if len(only_f) != 1 or len(only_g) != 1:
        return 0
    (a,) = only_f
    (b,) = only_g
    if a > b:
        return 1 if (b, 0) in legal_ends(f, a) else 0
    return 1 if (a, 0) in legal_ends(g, b) else 0


def out_edges(f: WeightDiagram) -> list[ExtEdge]:
    """Weight-zero moves leaving f, by decreasing start then decreasing end."""
    out = []
    for a in f.cross_list:
        for b, w in legal_ends(f, a):
            if w == 0:
                out.append(ExtEdge(f, apply_move(f, a, b), a, b))
    return out


def in_edges(f: WeightDiagram) -> list[ExtEdge]:
    """Weight-zero moves arriving at f: one per cap, swapping its two ends."""
    out = []
    for cap in cap_diagram(f).caps:
        g = f.with_crosses((f.crosses - {cap.begin}) | {cap.end})
        out.append(ExtEdge(g, f, cap.end, cap.begin))
    return out


def ext_neighbors(f: WeightDiagram) -> list[ExtNeighbor]:
    """All diagrams with a nonzero extension against f, with direction tags."""
    neighbors = [ExtNeighbor(e.target, "out") for e in out_edges(f)]
    neighbors += [ExtNeighbor(e.source, "in") for e in in_edges(f)]
    seen = [n.diagram for n in neighbors]
    if len(set(seen)) != len(seen):
        raise InvariantViolation(f"two legal moves join {f} and one neighbor")
    return neighbors


@dataclass(frozen=True)
class GraphSlice:
    """A finite induced piece of the extension quiver."""

    vertices: tuple[WeightDiagram, ...]
    edges: tuple[ExtEdge, ...]

    def to_json_obj(self) -> dict:
        pos = {f: i for i, f in enumerate(self.vertices)}
        return {
            "vertices": [serialize(f) for f in self.vertices],
            "edges": [
                {"from": pos[e.source], "to": pos[e.target], "s": e.start, "t": e.end}
                for e in self.edges
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GraphSlice":
        vertices = tuple(parse(s) for s in obj["vertices"])
        edges = tuple(
            ExtEdge(vertices[e["from"]], vertices[e["to"]], e["s"], e["t"])
            for e in obj["edges"]
        )
        return cls(vertices, edges)

    def to_dot(self) -> str:
        pos = {f: i for i, f in enumerate(self.vertices)}
        lines = ["digraph ext {"]
        for i, f in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{serialize(f)}"];')
        for e in self.edges:
            lines.append(
                f'  v{pos[e.source]} -> v{pos[e.target]} [label="[{e.start},{e.end}]"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def ext_component(f: WeightDiagram, radius: int) -> GraphSlice:
    """Vertices within ``radius`` undirected steps of f, with every
    weight-zero edge among them; breadth-first discovery order."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    order = [f]
    dist = {f: 0}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        if dist[v] == radius:
            continue
        for nb in ext_neighbors(v):
            if nb.diagram not in dist:
                dist[nb.diagram] = dist[v] + 1
                order.append(nb.diagram)
    included = set(order)
    edges = []
    for v in order:
        for e in out_edges(v):
            if e.target in included:
                edges.append(e)
    return GraphSlice(tuple(order), tuple(edges))

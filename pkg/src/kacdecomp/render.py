"""ASCII and SVG pictures of weight and cap diagrams.

Both formats draw a number line spanning one position past the diagram's
support (plus cap endpoints in cap style), with the symbol of every position
on the line and position labels at multiples of five.  Caps are drawn above
the line: in ASCII one text row per nesting depth, outermost on top, with
vertical legs dropping to the endpoints; in SVG as semicircular arcs.
Output is deterministic.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .diagrams import WeightDiagram, cap_diagram

_UNIT = 24  # svg pixels per position


def render(f: WeightDiagram, style: str = "cap", format: str = "ascii") -> str:
    if style not in ("cap", "weight"):
        raise ValueError(f"unknown style {style!r}")
    if format not in ("ascii", "svg"):
        raise ValueError(f"unknown format {format!r}")
    caps = cap_diagram(f).caps if style == "cap" else ()
    positions = set(f.support) | {p for c in caps for p in (c.begin, c.end)}
    if positions:
        lo, hi = min(positions) - 1, max(positions) + 1
    else:
        lo, hi = -1, 1
    if format == "ascii":
        return _ascii(f, caps, lo, hi)
    return _svg(f, caps, lo, hi)


def _label_positions(lo: int, hi: int) -> list[int]:
    labels = [p for p in range(lo, hi + 1) if p % 5 == 0]
    return labels or [lo]


def _ascii(f: WeightDiagram, caps, lo: int, hi: int) -> str:
    ncols = (hi - lo) * 2 + 1

    def col(p: int) -> int:
        return (p - lo) * 2

    rows: list[str] = []
    if caps:
        depth = {
            c: sum(1 for o in caps if o.begin < c.begin and c.end < o.end)
            for c in caps
        }
        maxd = max(depth.values())
        grid = [[" "] * ncols for _ in range(maxd + 1)]
        for c in caps:
            d = depth[c]
            for x in range(col(c.begin) + 1, col(c.end)):
                grid[d][x] = "-"
            grid[d][col(c.begin)] = "/"
            grid[d][col(c.end)] = "\\"
            for r in range(d + 1, maxd + 1):
                grid[r][col(c.begin)] = "|"
                grid[r][col(c.end)] = "|"
        rows.extend("".join(r).rstrip() for r in grid)
    symbols = [" "] * ncols
    for p in range(lo, hi + 1):
        symbols[col(p)] = f.symbol(p).value
    rows.append("".join(symbols).rstrip())
    ruler = [" "] * (ncols + 8)
    for p in _label_positions(lo, hi):
        for i, ch in enumerate(str(p)):
            ruler[col(p) + i] = ch
    rows.append("".join(ruler).rstrip())
    return "\n".join(rows) + "\n"


def _svg(f: WeightDiagram, caps, lo: int, hi: int) -> str:
    margin = _UNIT

    def x(p: int) -> int:
        return (p - lo) * _UNIT + margin

    max_r = max(((c.end - c.begin) * _UNIT // 2 for c in caps), default=0)
    base = max_r + _UNIT
    width = (hi - lo) * _UNIT + 2 * margin
    height = base + 2 * _UNIT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'font-family="monospace" font-size="14">',
        f'<line x1="{x(lo)}" y1="{base}" x2="{x(hi)}" y2="{base}" '
        f'stroke="black"/>',
    ]
    for c in caps:
        r = (c.end - c.begin) * _UNIT // 2
        parts.append(
            f'<path d="M {x(c.begin)} {base} A {r} {r} 0 0 1 {x(c.end)} {base}" '
            f'fill="none" stroke="black"/>'
        )
    for p in range(lo, hi + 1):
        parts.append(
            f'<text x="{x(p)}" y="{base + 16}" text-anchor="middle">'
            f"{escape(f.symbol(p).value)}</text>"
        )
    for p in _label_positions(lo, hi):
        parts.append(
            f'<text x="{x(p)}" y="{base + 32}" text-anchor="middle" '
            f'font-size="10">{p}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

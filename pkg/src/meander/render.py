"""ASCII and SVG drawings of meander graphs.

Both renderers read a :class:`GraphDocument` only, so a drawing is a pure
function of the serialised data.
"""

from __future__ import annotations

from .io import GraphDocument

Arc = tuple[int, int]
COL = 4  # ASCII columns per vertex


def arc_levels(arcs) -> dict[Arc, int]:
    """Stacking level of each arc: one above every narrower arc it overlaps."""
    levels: dict[Arc, int] = {}
    for arc in sorted(arcs, key=lambda a: (a[1] - a[0], a)):
        i, j = arc
        under = [lv for (p, q), lv in levels.items() if i <= q and p <= j]
        levels[arc] = 1 + max(under, default=0)
    return levels


def _x(v: float) -> int:
    return int(round(COL * (v - 1))) + COL // 2


def _put(grid: list[list[str]], r: int, c: int, ch: str) -> None:
    old = grid[r][c]
    if {old, ch} == {"-", "|"} or (old != " " and old != ":" and old != ch):
        ch = "+"
    grid[r][c] = ch


def _half_rows(arcs, width: int) -> list[list[str]]:
    """Rows for one side, row 0 nearest the vertex line."""
    levels = arc_levels(arcs)
    depth = max(levels.values(), default=0)
    grid = [[" "] * width for _ in range(depth)]
    for (i, j), lv in sorted(levels.items(), key=lambda t: t[1]):
        xi, xj = _x(i), _x(j)
        for c in range(xi + 1, xj):
            _put(grid, lv - 1, c, "-")
        _put(grid, lv - 1, xi, "+")
        _put(grid, lv - 1, xj, "+")
        for r in range(lv - 1):
            _put(grid, r, xi, "|")
            _put(grid, r, xj, "|")
    return grid


def render_ascii(doc: GraphDocument) -> str:
    g = doc.graph()
    nv = g.vertex_count
    width = COL * max(nv, 1)
    above = _half_rows(g.arcs_above, width)
    below = _half_rows(g.arcs_below, width)
    labels = [" "] * width
    for v in range(1, nv + 1):
        s = str(v)
        start = _x(v) - (len(s) - 1) // 2
        for k, ch in enumerate(s):
            labels[start + k] = ch
    rows = list(reversed(above)) + [labels] + below
    if doc.mirror is not None:
        mx = _x(doc.mirror)
        for row in rows:
            if row[mx] == " ":
                row[mx] = ":"
    title = f"{doc.algebra_type} n={doc.n} a={list(doc.a)} b={list(doc.b)}"
    if doc.crossing:
        title += " crossing"
    title += f" index={doc.index}"
    return "\n".join([title] + ["".join(r).rstrip() for r in rows]) + "\n"


def render_svg(doc: GraphDocument, unit: int = 30, radius: float = 3.0) -> str:
    g = doc.graph()
    nv = g.vertex_count
    span = max(((j - i) for _, (i, j) in g.arcs()), default=1)
    h = unit * span / 2 + unit
    width, height = unit * (nv + 1), 2 * h
    y = h
    xs = lambda v: unit * v
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
             f'viewBox="0 0 {width:g} {height:g}">',
             '<g fill="none" stroke="black" stroke-width="1.5">']
    for side, (i, j) in g.arcs():
        r = unit * (j - i) / 2
        sweep = 1 if side == "above" else 0
        parts.append(f'<path class="arc {side}" d="M {xs(i):g} {y:g} A {r:g} {r:g} 0 0 {sweep} '
                     f'{xs(j):g} {y:g}"/>')
    parts.append("</g>")
    if doc.mirror is not None:
        mx = xs(doc.mirror)
        parts.append(f'<line class="mirror" x1="{mx:g}" y1="0" x2="{mx:g}" y2="{height:g}" '
                     'stroke="gray" stroke-dasharray="2,4"/>')
    for v in range(1, nv + 1):
        parts.append(f'<circle cx="{xs(v):g}" cy="{y:g}" r="{radius:g}" fill="black"/>')
        parts.append(f'<text x="{xs(v):g}" y="{y + 4 * radius + 6:g}" font-size="9" '
                     f'text-anchor="middle">{v}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Text and SVG pictures of Brauer diagrams."""

from __future__ import annotations

from .diagram import BrauerDiagram
from .errors import UnsupportedSize

__all__ = ["render_ascii", "render_svg", "MAX_RENDER_T"]

MAX_RENDER_T = 30
DOT = "●"


def _arc_rows(arcs, n, upward):
    """Rows of box-drawing text for horizontal strands, outermost arc farthest from the dots."""
    width = 2 * n - 1
    arcs = sorted(arcs, key=lambda p: (-(p[1] - p[0]), p[0]))
    rows = []
    for level, (a, b) in enumerate(arcs):
        row = [" "] * width
        ca, cb = 2 * (a - 1), 2 * (b - 1)
        for c in range(ca + 1, cb):
            row[c] = "─"
        row[ca], row[cb] = ("┌", "┐") if upward else ("└", "┘")
        # legs of arcs drawn on earlier (outer) rows pass through this one
        for pa, pb in arcs[:level]:
            for c in (2 * (pa - 1), 2 * (pb - 1)):
                row[c] = "┼" if row[c] == "─" else "│"
        rows.append("".join(row).rstrip())
    if not upward:
        rows.reverse()
    return rows


def _through_rows(d: BrauerDiagram):
    """Route through-strands from top to bottom columns with adjacent swaps."""
    n = d.strands
    verticals = d.vertical_strands()
    if not verticals:
        return []
    cur = [None] * n
    target_col = {}
    for sid, (top, bottom) in enumerate(verticals):
        cur[top - 1] = sid
        target_col[sid] = bottom - 1
    # pair empty top columns with empty bottom columns so every slot has a target
    empty_bottom = [c for c in range(n) if c not in target_col.values()]
    empties = iter(empty_bottom)
    keys = [target_col[s] if s is not None else next(empties) for s in cur]

    rows = [_spread("".join("│" if s is not None else " " for s in cur))]
    phase = 0
    while keys != sorted(keys):
        row = [" "] * (2 * n - 1)
        swapped = set()
        for c in range(phase, n - 1, 2):
            if keys[c] > keys[c + 1]:
                left, right = cur[c], cur[c + 1]
                if left is not None and right is not None:
                    row[2 * c + 1] = "╳"
                elif left is not None:
                    row[2 * c + 1] = "╲"
                elif right is not None:
                    row[2 * c + 1] = "╱"
                keys[c], keys[c + 1] = keys[c + 1], keys[c]
                cur[c], cur[c + 1] = cur[c + 1], cur[c]
                swapped.update((c, c + 1))
        for c in range(n):
            if c not in swapped and cur[c] is not None:
                row[2 * c] = "│"
        if swapped:
            rows.append("".join(row).rstrip())
        phase ^= 1
    rows.append(_spread("".join("│" if s is not None else " " for s in cur)))
    return rows


def _spread(cols: str) -> str:
    return " ".join(cols).rstrip()


def render_ascii(d: BrauerDiagram) -> str:
    """Top arcs, top dots, through-strands, bottom dots, bottom arcs."""
    if d.t > MAX_RENDER_T:
        raise UnsupportedSize(f"render supports t <= {MAX_RENDER_T}, got {d.t}")
    n = d.strands
    dots = " ".join([DOT] * n)
    lines = _arc_rows(d.top_pairs(), n, upward=True)
    lines.append(dots)
    lines += _through_rows(d)
    lines.append(dots)
    lines += _arc_rows(d.bottom_pairs(), n, upward=False)
    return "\n".join(lines) + "\n"


def render_svg(d: BrauerDiagram, scale: int = 40) -> str:
    if d.t > MAX_RENDER_T:
        raise UnsupportedSize(f"render supports t <= {MAX_RENDER_T}, got {d.t}")
    n = d.strands
    top_y, bottom_y = scale, 3 * scale
    x = lambda pos: pos * scale  # noqa: E731
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{(n + 1) * scale}" height="{4 * scale}">'
    ]
    for a, b in d.top_pairs():
        depth = top_y + scale * (b - a) / (n + 1) + scale / 4
        parts.append(f'<path d="M {x(a)} {top_y} C {x(a)} {depth:g} {x(b)} {depth:g} {x(b)} {top_y}" '
                     'fill="none" stroke="black"/>')
    for a, b in d.bottom_pairs():
        depth = bottom_y - scale * (b - a) / (n + 1) - scale / 4
        parts.append(f'<path d="M {x(a)} {bottom_y} C {x(a)} {depth:g} {x(b)} {depth:g} {x(b)} {bottom_y}" '
                     'fill="none" stroke="black"/>')
    mid = (top_y + bottom_y) / 2
    for a, b in d.vertical_strands():
        parts.append(f'<path d="M {x(a)} {top_y} C {x(a)} {mid:g} {x(b)} {mid:g} {x(b)} {bottom_y}" '
                     'fill="none" stroke="black"/>')
    for pos in range(1, n + 1):
        for y in (top_y, bottom_y):
            parts.append(f'<circle cx="{x(pos)}" cy="{y}" r="4"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

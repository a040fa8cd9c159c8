"""Drawing event words as ASCII art or SVG.

Each event gets a fixed-width column block; strand heights map to rows
(ASCII) or y coordinates (SVG), highest strand on top.  In ASCII a left cusp
is drawn as '<', a right cusp as '>' and a crossing as 'X', always in the
gap row between the two heights involved, which is what ``parse_ascii``
reads back.
"""

from __future__ import annotations

from ..errors import FrontError
from .word import FrontWord, max_strands, strand_states

BLOCK = 4
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _moves(before, after):
    """(strand, height before, height after) for strands surviving an event."""
    where = {s: i for i, s in enumerate(after)}
    return [(s, i, where[s]) for i, s in enumerate(before) if s in where]


def render_ascii(f: FrontWord) -> str:
    m = max_strands(f)
    rows = 2 * m - 1
    width = BLOCK * len(f.events)
    grid = [[" "] * width for _ in range(rows)]

    def y(level):
        return 2 * (m - 1 - level)

    def put(r, c, ch):
        old = grid[r][c]
        grid[r][c] = "X" if {old, ch} == {"/", "\\"} else ch

    states = list(strand_states(f.events))
    for j, (kind, pos) in enumerate(f.events):
        x = BLOCK * j
        for _, i, k in _moves(states[j], states[j + 1]):
            y0, d = y(i), k - i
            if d == 0:
                for c in range(BLOCK):
                    put(y0, x + c, "-")
            elif abs(d) == 1:
                put(y0, x, "-")
                put(y0 - d, x + 1, "/" if d > 0 else "\\")
                put(y(k), x + 2, "-")
                put(y(k), x + 3, "-")
            else:
                step = -1 if d > 0 else 1
                glyph = "/" if d > 0 else "\\"
                for c in range(3):
                    put(y0 + step * (c + 1), x + c, glyph)
                put(y(k), x + 3, "-")
        if kind == "L":
            put(y(pos) - 1, x + 2, "<")
            put(y(pos), x + 3, "-")
            put(y(pos + 1), x + 3, "-")
        elif kind == "R":
            put(y(pos), x, "-")
            put(y(pos + 1), x, "-")
            put(y(pos) - 1, x + 1, ">")
    return "\n".join("".join(r).rstrip() for r in grid) + "\n"


def parse_ascii(text: str) -> FrontWord:
    """Read back the output of :func:`render_ascii`."""
    lines = text.rstrip("\n").split("\n")
    rows = len(lines)
    if rows % 2 == 0:
        raise FrontError("expected an odd number of rows")
    m = (rows + 1) // 2
    width = max(len(ln) for ln in lines)
    grid = [ln.ljust(width) for ln in lines]
    events = []
    for x in range(0, width, BLOCK):
        hits = [
            (grid[r][c], r)
            for r in range(rows)
            for c in range(x, min(x + BLOCK, width))
            if grid[r][c] in "<>X"
        ]
        if len(hits) != 1:
            raise FrontError(f"column block at {x} has {len(hits)} event glyphs")
        ch, r = hits[0]
        if r % 2 == 0:
            raise FrontError(f"event glyph {ch!r} on a strand row")
        level = m - 1 - (r + 1) // 2
        events.append(({"<": "L", ">": "R", "X": "X"}[ch], level))
    return FrontWord(tuple(events))


def render_svg(f: FrontWord, dx: int = 24, dy: int = 16) -> str:
    m = max_strands(f)
    margin = dy
    width = dx * len(f.events) + 2 * margin
    height = dy * (m - 1) + 2 * margin
    rad = dy // 2
    comp = f._trace.component

    def y(level):
        return margin + dy * (m - 1 - level)

    under, over = [], []

    def seg(s, d):
        return f'<path d="{d}" stroke="{PALETTE[comp[s] % len(PALETTE)]}"/>'

    states = list(strand_states(f.events))
    for j, (kind, pos) in enumerate(f.events):
        x0 = margin + dx * j
        x1, xm = x0 + dx, x0 + dx // 2
        before, after = states[j], states[j + 1]
        for s, i, k in _moves(before, after):
            d = f"M{x0} {y(i)}L{x1} {y(k)}"
            if kind == "X" and k == i - 1:
                over.append(f'<path d="{d}" stroke="white" stroke-width="6"/>')
                over.append(seg(s, d))
            else:
                under.append(seg(s, d))
        if kind == "L":
            lo, up = after[pos], after[pos + 1]
            under.append(seg(lo, f"M{x1} {y(pos)}L{xm} {y(pos)}A{rad} {rad} 0 0 1 {xm} {y(pos + 1)}"))
            under.append(seg(up, f"M{xm} {y(pos + 1)}L{x1} {y(pos + 1)}"))
        elif kind == "R":
            lo, up = before[pos], before[pos + 1]
            under.append(seg(up, f"M{x0} {y(pos + 1)}L{xm} {y(pos + 1)}A{rad} {rad} 0 0 1 {xm} {y(pos)}"))
            under.append(seg(lo, f"M{xm} {y(pos)}L{x0} {y(pos)}"))
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    body = ['<g fill="none" stroke-width="2" stroke-linecap="round">'] + under + over + ["</g>"]
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>'] + body + ["</svg>"]) + "\n"


def render(f: FrontWord, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(f)
    if fmt == "svg":
        return render_svg(f)
    raise FrontError(f"unknown format {fmt!r}; use ascii or svg")

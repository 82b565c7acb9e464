"""Wiring diagrams of reduced words and their bounded-chamber sets.

Strings are numbered 1..n+1 top to bottom on the left edge; "below" means a
larger position index.  A crossing with letter g swaps the strings at
positions g and g+1.  The chamber set of the bounded chamber at gap g between
two consecutive letter-g crossings is the set of string labels strictly below
the gap during that interval (it cannot change there: only letter-g crossings
move labels across the gap).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import ReducedWord


@dataclass(frozen=True)
class ChamberSet:
    """Labels below gap ``gap`` between two consecutive occurrences of it.

    ``interval`` is the 1-based ordinal of the chamber among those at the same
    gap; ``start``/``end`` are the word positions (1-based) of the bracketing
    crossings.
    """

    gap: int
    interval: int
    members: frozenset[int]
    start: int
    end: int


def chamber_sets(word: ReducedWord) -> list[ChamberSet]:
    """The n(n-1)/2 bounded-chamber sets of a reduced word's wiring diagram."""
    n = word.rank
    order = list(range(1, n + 2))  # order[pos-1] = label at position pos
    below_since: dict[int, tuple[int, frozenset[int]]] = {}
    counts = {g: 0 for g in range(1, n + 1)}
    out = []
    for t, g in enumerate(word.letters, start=1):
        below_now = frozenset(order[g:])
        if g in below_since:
            t0, recorded = below_since[g]
            assert recorded == below_now, "below-set drifted between crossings"
            counts[g] += 1
            out.append(ChamberSet(g, counts[g], recorded, t0, t))
        order[g - 1], order[g] = order[g], order[g - 1]
        below_since[g] = (t, frozenset(order[g:]))
    for cs in out:
        _check_not_initial_terminal(cs.members, n)
    assert len(out) == n * (n - 1) // 2
    return out


def _check_not_initial_terminal(members: frozenset[int], rank: int):
    m = sorted(members)
    if m and m == list(range(1, len(m) + 1)):
        raise AssertionError(f"chamber set {m} is an initial segment")
    if m and m == list(range(rank + 2 - len(m), rank + 2)):
        raise AssertionError(f"chamber set {m} is a terminal segment")


def members_str(members: frozenset[int], rank: int) -> str:
    if rank + 1 <= 9:
        return "".join(str(x) for x in sorted(members))
    return ",".join(str(x) for x in sorted(members))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_wiring(word: ReducedWord, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _render_ascii(word)
    if fmt == "svg":
        return _render_svg(word)
    raise ValueError(f"unknown format {fmt!r} (want 'ascii' or 'svg')")


def _string_positions(word: ReducedWord) -> list[list[int]]:
    """positions[t][label-1] = position of the label after t crossings."""
    n = word.rank
    order = list(range(1, n + 2))
    snapshots = []

    def pos_of() -> list[int]:
        inv = [0] * (n + 1)
        for p, label in enumerate(order, start=1):
            inv[label - 1] = p
        return inv

    snapshots.append(pos_of())
    for g in word.letters:
        order[g - 1], order[g] = order[g], order[g - 1]
        snapshots.append(pos_of())
    return snapshots


def _render_ascii(word: ReducedWord) -> str:
    n, k = word.rank, len(word.letters)
    width = 4 * k + 4
    grid = [[" "] * width for _ in range(2 * n + 1)]
    order = list(range(1, n + 2))
    for p in range(n + 1):
        grid[2 * p][0] = str(order[p]) if n + 1 <= 9 else "*"
        for c in range(2, width):
            grid[2 * p][c] = "-"
    for t, g in enumerate(word.letters):
        c0 = 4 * t + 4
        r = 2 * (g - 1)
        grid[r][c0] = "\\"
        grid[r][c0 + 1] = " "
        grid[r + 1][c0] = " "
        grid[r + 1][c0 + 1] = "X"
        grid[r + 2][c0] = "/"
        grid[r + 2][c0 + 1] = " "
        grid[r][c0 - 1] = grid[r + 2][c0 - 1] = "."
        grid[r][c0 + 2] = grid[r + 2][c0 + 2] = "."
        order[g - 1], order[g] = order[g], order[g - 1]
    for cs in chamber_sets(word):
        label = members_str(cs.members, word.rank)
        mid = 4 * ((cs.start + cs.end) // 2)
        col = max(3, mid - len(label) // 2)
        row = 2 * cs.gap - 1
        for i, ch in enumerate(label):
            if col + i < width:
                grid[row][col + i] = ch
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def _render_svg(word: ReducedWord) -> str:
    n, k = word.rank, len(word.letters)
    snapshots = _string_positions(word)
    xstep, ystep, pad = 40, 30, 20
    width = pad * 2 + xstep * (k + 1)
    height = pad * 2 + ystep * (n + 1)

    def xy(t: int, pos: int) -> tuple[int, int]:
        return pad + xstep * t, pad + ystep * (pos - 1) + ystep // 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<style>text{font-family:monospace;font-size:12px}'
        'polyline{fill:none;stroke:#000;stroke-width:1.5}</style>',
    ]
    for label in range(1, n + 2):
        pts = []
        for t in range(k + 1):
            x, y = xy(t, snapshots[t][label - 1])
            if t == 0:
                pts.append(f"{x},{y}")
            else:
                xprev, yprev = xy(t - 1, snapshots[t - 1][label - 1])
                if y != yprev:
                    pts.append(f"{x - xstep // 4 * 3},{yprev}")
                    pts.append(f"{x - xstep // 4},{y}")
                pts.append(f"{x},{y}")
        x0, y0 = xy(0, snapshots[0][label - 1])
        parts.append(f'<text x="{x0 - 14}" y="{y0 + 4}">{label}</text>')
        parts.append(f'<polyline points="{" ".join(pts)}"/>')
    for cs in chamber_sets(word):
        label = members_str(cs.members, word.rank)
        x = pad + xstep * Fraction(cs.start + cs.end, 2)
        y = pad + ystep * cs.gap
        parts.append(
            f'<text x="{_fmt(x)}" y="{y + 4}" text-anchor="middle" '
            f'fill="#b00">{label}</text>')
    for t, g in enumerate(word.letters, start=1):
        x, _ = xy(t, 1)
        parts.append(
            f'<text x="{x - xstep // 2}" y="{height - 4}" '
            f'text-anchor="middle">{g}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _fmt(value) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return str(f.numerator / f.denominator)

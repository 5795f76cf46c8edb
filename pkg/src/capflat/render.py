"""ASCII and SVG pictures of weight, cap and tally diagrams.

Output depends only on the inputs, so renders can be compared byte for byte.
"""

from __future__ import annotations

from .diagram import CROSS, DOT, CapDiagram, TallyProfile, WeightFunction

STYLES = ("ascii", "svg")


def render_window(
    f: WeightFunction, caps: CapDiagram | None = None, t: TallyProfile | None = None
) -> tuple[int, int]:
    """Smallest window showing ``f`` with one spare point each side, plus any caps or tally."""
    if t is not None:
        return t.lo, t.hi
    ends = []
    if f.rank:
        ends += [f.entries[0] - 1, f.anchor + 1]
    if caps is not None and len(caps):
        ends += [min(c.start for c in caps), max(c.end for c in caps)]
    if not ends:
        return -2, 2
    return min(ends), max(ends)


def _check_window(window, f, caps, t) -> None:
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty render window [{lo}, {hi}]")
    drawn = list(f.entries) + [z for cap in caps or () for z in cap]
    if any(not lo <= z <= hi for z in drawn):
        raise ValueError(f"window [{lo}, {hi}] does not cover everything drawn")
    if t is not None and (lo < t.lo or hi > t.hi):
        raise ValueError(f"window [{lo}, {hi}] exceeds the tally window [{t.lo}, {t.hi}]")


def render(
    f: WeightFunction,
    caps: CapDiagram | None = None,
    t: TallyProfile | None = None,
    style: str = "ascii",
    window: tuple[int, int] | None = None,
) -> str:
    if window is None:
        window = render_window(f, caps, t)
    _check_window(window, f, caps, t)
    if style == "ascii":
        return _ascii(f, caps, t, window)
    if style == "svg":
        return _svg(f, caps, t, window)
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


def _ascii(f, caps, t, window) -> str:
    lo, hi = window
    labels = [str(z) for z in range(lo, hi + 1)]
    if t is not None:
        labels += [str(t[z]) for z in range(lo, hi + 1)]
    w = max(2, max(len(s) for s in labels) + 1)
    width = (hi - lo) * w + w

    def col(z: int) -> int:
        return (z - lo) * w + w - 1

    lines: list[str] = []

    if t is not None:
        values = [t[z] for z in range(lo, hi + 1)]
        top, bottom = 2 * max(values), 2 * min(values)
        grid = [[" "] * width for _ in range(top - bottom + 1)]
        for z in range(lo, hi + 1):
            grid[top - 2 * t[z]][col(z)] = "*"
            if z < hi:
                rise = t[z + 1] - t[z]
                grid[top - (t[z] + t[z + 1])][col(z) + w // 2] = "/" if rise > 0 else "\\"
        lines += ["".join(row).rstrip() for row in grid]
        lines.append("")

    if caps is not None and len(caps):
        depth = {cap: caps.depth(cap) for cap in caps}
        levels = max(depth.values())
        for level in range(levels, 0, -1):
            row = [" "] * width
            for cap in caps:
                b, e = col(cap.start), col(cap.end)
                if depth[cap] == level:
                    row[b] = row[e] = "."
                    for x in range(b + 1, e):
                        row[x] = "-"
                elif depth[cap] > level:
                    row[b] = row[e] = "|"
            lines.append("".join(row).rstrip())

    symbols = [" "] * width
    for z in range(lo, hi + 1):
        symbols[col(z)] = CROSS if z in f else DOT
    lines.append("".join(symbols).rstrip())
    lines.append("".join(s.rjust(w) for s in labels[: hi - lo + 1]))
    if t is not None:
        lines.append("".join(s.rjust(w) for s in labels[hi - lo + 1:]))
    return "\n".join(lines) + "\n"


_UNIT = 20
_MARGIN = 20


def _svg(f, caps, t, window) -> str:
    lo, hi = window
    cap_height = max((cap.end - cap.start) for cap in caps) * _UNIT // 2 if caps else 0
    if t is not None:
        vmax = max(t[z] for z in range(lo, hi + 1))
        vmin = min(t[z] for z in range(lo, hi + 1))
        plot_height = (vmax - vmin) * _UNIT
    else:
        vmax = vmin = plot_height = 0
    axis_y = _MARGIN + plot_height + (_UNIT if t is not None else 0) + cap_height
    width = (hi - lo) * _UNIT + 2 * _MARGIN
    height = axis_y + 2 * _MARGIN

    def x(z: int) -> int:
        return _MARGIN + (z - lo) * _UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{x(lo)}" y1="{axis_y}" x2="{x(hi)}" y2="{axis_y}" stroke="black"/>',
    ]
    if t is not None:
        pts = " ".join(f"{x(z)},{_MARGIN + (vmax - t[z]) * _UNIT}" for z in range(lo, hi + 1))
        out.append(f'<polyline points="{pts}" fill="none" stroke="black"/>')
    for cap in caps or ():
        r = (cap.end - cap.start) * _UNIT // 2
        out.append(
            f'<path d="M {x(cap.start)} {axis_y} A {r} {r} 0 0 1 {x(cap.end)} {axis_y}" '
            f'fill="none" stroke="black"/>'
        )
    for z in range(lo, hi + 1):
        if z in f:
            out.append(f'<text x="{x(z)}" y="{axis_y + 5}" text-anchor="middle" font-size="14">{CROSS}</text>')
        else:
            out.append(f'<circle cx="{x(z)}" cy="{axis_y}" r="2" fill="black"/>')
        out.append(f'<text x="{x(z)}" y="{axis_y + 22}" text-anchor="middle" font-size="10">{z}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

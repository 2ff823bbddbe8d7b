"""SVG paths for sums of two TC elements, one row per pair."""

from __future__ import annotations

import math
from typing import Iterable, Tuple

from .carriers import Polar
from .catalog import TC
from .valueset import Arc, Disk, Point

ROW = 120
RADIUS = 40.0


def _f(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _xy(cx, cy, r, theta):
    # SVG y grows downwards
    return cx + r * math.cos(theta), cy - r * math.sin(theta)


def _marker(cx, cy, cls):
    return f'<circle class="{cls}" cx="{_f(cx)}" cy="{_f(cy)}" r="3"/>'


def _disk_path(cx, cy, r):
    return (
        f'<path class="sum disk" d="M {_f(cx + r)} {_f(cy)} '
        f"A {_f(r)} {_f(r)} 0 1 0 {_f(cx - r)} {_f(cy)} "
        f'A {_f(r)} {_f(r)} 0 1 0 {_f(cx + r)} {_f(cy)} Z"/>'
    )


def _arc_path(cx, cy, r, lo, span, open_lo, open_hi):
    x0, y0 = _xy(cx, cy, r, lo)
    x1, y1 = _xy(cx, cy, r, lo + span)
    large = 1 if span > math.pi else 0
    ends = ("open" if open_lo else "closed") + "-" + ("open" if open_hi else "closed")
    return (
        f'<path class="sum arc {ends}" d="M {_f(x0)} {_f(y0)} '
        f'A {_f(r)} {_f(r)} 0 {large} 0 {_f(x1)} {_f(y1)}"/>'
    )


def emit_regions(pairs: Iterable[Tuple[Polar, Polar]]) -> str:
    """An SVG document drawing ``z``, ``w`` and ``z + w`` for each pair.

    Each row is scaled so the largest magnitude involved sits on a circle of
    fixed radius. Disks are filled paths, arcs are stroked paths and single
    points are markers.
    """
    pairs = [(TC.check(z), TC.check(w)) for z, w in pairs]
    rows = []
    for k, (z, w) in enumerate(pairs):
        cx, cy = 60.0, ROW * k + ROW / 2
        s = TC.hyperadd(z, w)
        top = max(z.logmag, w.logmag)
        if top == -math.inf:
            top = 0.0

        def radius(logmag):
            return 0.0 if logmag == -math.inf else RADIUS * math.exp(logmag - top)

        parts = [f'<g class="row" id="row{k}">']
        parts.append(
            f'<circle class="guide" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(RADIUS)}" fill="none"/>'
        )
        for r in s.regions:
            if isinstance(r, Disk):
                parts.append(_disk_path(cx, cy, radius(r.logmag)))
            elif isinstance(r, Arc):
                parts.append(_arc_path(cx, cy, radius(r.logmag), r.lo, r.span, r.open_lo, r.open_hi))
            elif isinstance(r, Point):
                x, y = _xy(cx, cy, radius(r.value.logmag), r.value.angle)
                parts.append(_marker(x, y, "sum point"))
        for name, v in (("z", z), ("w", w)):
            x, y = _xy(cx, cy, radius(v.logmag), v.angle)
            parts.append(_marker(x, y, f"input {name}"))
        parts.append("</g>")
        rows.append("\n".join(parts))
    height = max(ROW * len(pairs), ROW)
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="120" height="{height}" '
        f'viewBox="0 0 120 {height}">'
    )
    style = (
        "<style>.guide{stroke:#bbb}.disk{fill:#7aa6d6;stroke:none}"
        ".arc{fill:none;stroke:#1f4e89;stroke-width:3}"
        ".input{fill:#c33}.point{fill:#1f4e89}</style>"
    )
    return "\n".join([head, style] + rows + ["</svg>"]) + "\n"

"""Deterministic SVG drawings of front and diagram words.

Slot k of a column sits at height k (bottom to top); event i occupies the
horizontal band [i, i + 1].  Cups and caps are drawn as round turns, cusps
as two arcs tangent to the horizontal at a sharp point, and the under
strand of a crossing is broken around the crossing point.
"""
from __future__ import annotations

from .model import CROSSINGS, FrontWord, SingularDiagramWord, footprint

DX = 40
DY = 30
MARGIN = 20
GAP = 0.18  # fraction of an under-strand removed on each side of the crossing


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(w) -> str:
    events = w.events
    sizes = w.columns()
    top = max(sizes) if sizes else 0
    width = DX * len(events) + 2 * MARGIN
    height = DY * max(top - 1, 0) + 2 * MARGIN

    def px(x: float) -> float:
        return MARGIN + DX * x

    def py(slot: float) -> float:  # slot is 1-based, bottom to top
        return MARGIN + DY * (top - slot)

    over = _over_strands(w)
    paths: list[str] = []
    dots: list[str] = []
    for i, ev in enumerate(events):
        kind, k = ev
        _, removed, inserted = footprint(ev)
        x0, x1 = px(i), px(i + 1)
        xm = (x0 + x1) / 2
        before = sizes[i]
        # strands that pass straight through the column
        for s in range(1, before + 1):
            if s < k:
                paths.append(f"M {_fmt(x0)} {_fmt(py(s))} L {_fmt(x1)} {_fmt(py(s))}")
            elif s >= k + removed:
                t = s - removed + inserted
                paths.append(f"M {_fmt(x0)} {_fmt(py(s))} L {_fmt(x1)} {_fmt(py(t))}")
        ya, yb = py(k), py(k + 1)
        ym = (ya + yb) / 2
        if kind == "Cup":
            paths.append(f"M {_fmt(x1)} {_fmt(ya)} C {_fmt(x0)} {_fmt(ya)} {_fmt(x0)} {_fmt(yb)} {_fmt(x1)} {_fmt(yb)}")
        elif kind == "Cap":
            paths.append(f"M {_fmt(x0)} {_fmt(ya)} C {_fmt(x1)} {_fmt(ya)} {_fmt(x1)} {_fmt(yb)} {_fmt(x0)} {_fmt(yb)}")
        elif kind == "L":
            paths.append(f"M {_fmt(x1)} {_fmt(ya)} Q {_fmt(xm)} {_fmt(ym)} {_fmt(x0)} {_fmt(ym)}")
            paths.append(f"M {_fmt(x0)} {_fmt(ym)} Q {_fmt(xm)} {_fmt(ym)} {_fmt(x1)} {_fmt(yb)}")
        elif kind == "R":
            paths.append(f"M {_fmt(x0)} {_fmt(ya)} Q {_fmt(xm)} {_fmt(ym)} {_fmt(x1)} {_fmt(ym)}")
            paths.append(f"M {_fmt(x1)} {_fmt(ym)} Q {_fmt(xm)} {_fmt(ym)} {_fmt(x0)} {_fmt(yb)}")
        elif kind in CROSSINGS:
            rising = ((x0, ya), (x1, yb))  # lower-left to upper-right
            falling = ((x0, yb), (x1, ya))
            if kind == "Xd":
                paths.append(_segment(*rising))
                paths.append(_segment(*falling))
                dots.append(f'<circle cx="{_fmt(xm)}" cy="{_fmt(ym)}" r="3"/>')
            else:
                top_strand, under = (rising, falling) if over[i] else (falling, rising)
                paths.append(_segment(*top_strand))
                (ux0, uy0), (ux1, uy1) = under
                for a, b in ((0.0, 0.5 - GAP), (0.5 + GAP, 1.0)):
                    paths.append(_segment((ux0 + a * (ux1 - ux0), uy0 + a * (uy1 - uy0)),
                                          (ux0 + b * (ux1 - ux0), uy0 + b * (uy1 - uy0))))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">',
    ]
    lines += [f'<path d="{d}"/>' for d in paths]
    lines.append("</g>")
    if dots:
        lines.append('<g fill="black">')
        lines += dots
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _segment(a, b) -> str:
    return f"M {_fmt(a[0])} {_fmt(a[1])} L {_fmt(b[0])} {_fmt(b[1])}"


def _over_strands(w) -> dict[int, bool]:
    """Whether the rising (lower-left) strand is drawn on top at each crossing."""
    if isinstance(w, FrontWord):
        # the falling strand has the lesser slope, so it is the overpass
        return {i: False for i, (k, _) in enumerate(w.events) if k == "X"}
    if isinstance(w, SingularDiagramWord):
        return {}
    return w.a_over()

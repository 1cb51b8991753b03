"""Fronts to blackboard-framed diagrams."""
from __future__ import annotations

from .model import SIGN_TOKEN, DiagramWord, FrontWord
from .moves import kink_template


def front_to_diagram(f: FrontWord) -> DiagramWord:
    """Diagram whose writhe is tb(f) and whose Whitney rotation is rot(f).

    Cusps become cups and caps, crossings keep their front sign.  Smoothing
    a right cusp loses half a unit of framing and turns the wrong way for
    the rotation count, so a kink of type (+1, -1) (down cusp) or (-1, -1)
    (up cusp) is spliced onto the strand entering every right cusp.
    """
    signs = f.crossing_signs()
    events = []
    for i, (kind, k) in enumerate(f.events):
        if kind == "L":
            events.append(("Cup", k))
        elif kind == "R":
            events.append(("Cap", k))
        else:
            events.append((SIGN_TOKEN[signs[i]], k))
    # entering passage of each right cusp, spliced right to left
    entries = sorted(
        ((p.index, p.role) for p in f.traversal.passages if f.events[p.index][0] == "R"),
        reverse=True,
    )
    for index, role in entries:
        k = f.events[index][1]
        slot = k if role == "lower" else k + 1
        kink = (-1, -1) if role == "lower" else (1, -1)
        events[index:index] = kink_template(kink, slot, 1)
    return DiagramWord(tuple(events))

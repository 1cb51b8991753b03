"""Classical and low-order finite-type invariants of words."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .gauss import diagram_to_gauss, pairing
from .model import CROSS_SIGN, DiagramWord, FrontWord, SingularDiagramWord, turn_half_rotation

# Arrow diagrams are named by their endpoint sequence read from the base
# point: chord numbers by first appearance, T = tail (overpass), H = head.
V2_FORMULA = {"1T2H1H2T": 1}
V3_FORMULA = {
    "1H2H3T1T3H2T": 1,
    "1H2T3H1T2H3T": 1,
    "1H2T3T2H1T3H": 1,
    "1T2H1H3T2T3H": 1,
    "1T2H3T1H2T3H": 1,
}

REPORT_ORDER = ("writhe", "rotation", "tb", "maslov", "v2", "v3")


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: int


def writhe(d: DiagramWord) -> int:
    return sum(CROSS_SIGN.get(k, 0) for k, _ in d.events)


def whitney_rotation(d: DiagramWord | SingularDiagramWord) -> int:
    half = 0
    for p in d.traversal.passages:
        kind = d.events[p.index][0]
        if kind in ("Cup", "Cap"):
            half += turn_half_rotation(kind, p)
    assert half % 2 == 0
    return half // 2


def tb_front(f: FrontWord) -> int:
    cusps = sum(1 for k, _ in f.events if k in ("L", "R"))
    return sum(f.crossing_signs().values()) - cusps // 2


def rot_front(f: FrontWord) -> int:
    down = up = 0
    for _, is_down in f.cusps():
        if is_down:
            down += 1
        else:
            up += 1
    return (down - up) // 2


def v2(d: DiagramWord) -> int:
    """Order-2 invariant; 0 on the unknot, 1 on either trefoil."""
    return pairing(diagram_to_gauss(d), V2_FORMULA)


def v3(d: DiagramWord) -> int:
    """Order-3 invariant; +1 on the positive trefoil, odd under mirroring."""
    return pairing(diagram_to_gauss(d), V3_FORMULA)


def invariant_report(w) -> list[InvariantValue]:
    from .convert import front_to_diagram

    if isinstance(w, FrontWord):
        d = front_to_diagram(w)
        vals = {"writhe": writhe(d), "rotation": whitney_rotation(d), "tb": tb_front(w),
                "maslov": rot_front(w), "v2": v2(d), "v3": v3(d)}
    elif isinstance(w, SingularDiagramWord):
        vals = {"rotation": whitney_rotation(w)}
    else:
        vals = {"writhe": writhe(w), "rotation": whitney_rotation(w), "v2": v2(w), "v3": v3(w)}
    return [InvariantValue(name, vals[name]) for name in REPORT_ORDER if name in vals]


def word_kind(w) -> str:
    if isinstance(w, FrontWord):
        return "front"
    if isinstance(w, SingularDiagramWord):
        return "singular"
    return "diagram"


def report_json(w) -> dict:
    return {
        "kind": word_kind(w),
        "word": w.serialize(),
        "invariants": {iv.name: iv.value for iv in invariant_report(w)},
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

"""Based Gauss diagrams and arrow-diagram pairings."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .model import CROSS_SIGN, DiagramWord


@dataclass(frozen=True)
class Chord:
    over: int
    under: int
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    """Chords on a circle with ``2 * len(chords)`` marked points 0, 1, ...

    The base point sits just before point 0.  Arrows run from the overpass
    to the underpass.
    """

    chords: tuple[Chord, ...]
    base_point: int = 0

    def __post_init__(self):
        ends = [c.over for c in self.chords] + [c.under for c in self.chords]
        if len(set(ends)) != len(ends):
            raise ValueError("chord endpoints must be distinct")

    @property
    def points(self) -> int:
        return 2 * len(self.chords)

    def rebased(self, shift: int) -> "GaussDiagram":
        """Move the base point forward by ``shift`` marked points."""
        n = self.points
        return GaussDiagram(tuple(
            Chord((c.over - shift) % n, (c.under - shift) % n, c.sign) for c in self.chords
        ))

    def sequence(self) -> list[tuple[int, str]]:
        """(chord index, 'T' or 'H') at each marked point, tails at overpasses."""
        seq: list[tuple[int, str]] = [(-1, "")] * self.points
        for i, c in enumerate(self.chords):
            seq[c.over] = (i, "T")
            seq[c.under] = (i, "H")
        return seq


def diagram_to_gauss(d: DiagramWord) -> GaussDiagram:
    over = d.a_over()
    position: dict[tuple[int, str], int] = {}
    for p in d.traversal.passages:
        if p.role in ("A", "B"):
            position[(p.index, p.role)] = len(position)
    chords = []
    for i in sorted(over):
        a, b = position[(i, "A")], position[(i, "B")]
        o, u = (a, b) if over[i] else (b, a)
        chords.append(Chord(o, u, CROSS_SIGN[d.events[i][0]]))
    return GaussDiagram(tuple(chords))


def pattern_of(seq: list[tuple[int, str]]) -> str:
    """Canonical name of a based arrow diagram given its endpoint sequence.

    Chords are renumbered by first appearance, e.g. ``"1T2T1H2H"``.
    """
    names: dict[int, int] = {}
    parts = []
    for chord, end in seq:
        if chord not in names:
            names[chord] = len(names) + 1
        parts.append(f"{names[chord]}{end}")
    return "".join(parts)


def pattern_counts(g: GaussDiagram, size: int) -> Counter:
    """Signed number of sub-diagrams of ``g`` with ``size`` arrows, by pattern."""
    seq = g.sequence()
    out: Counter = Counter()
    for subset in combinations(range(len(g.chords)), size):
        chosen = set(subset)
        sub = [p for p in seq if p[0] in chosen]
        sign = 1
        for i in subset:
            sign *= g.chords[i].sign
        out[pattern_of(sub)] += sign
    return out


def pairing(g: GaussDiagram, formula: dict[str, int]) -> int:
    """Evaluate an integer combination of based arrow diagrams on ``g``."""
    total = 0
    for size in sorted({len(p) // 4 for p in formula}):
        counts = pattern_counts(g, size)
        total += sum(coeff * counts.get(p, 0) for p, coeff in formula.items() if len(p) // 4 == size)
    return total

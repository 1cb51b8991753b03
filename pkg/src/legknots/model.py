"""Morse-event encodings of fronts and diagrams, plus the oriented traversal.

A word is a left-to-right sequence of events.  Between consecutive events
sits a *column* of strands numbered 1..n from bottom to top; column ``c``
lies just left of event ``c``.  Every event removes ``r`` consecutive
strands starting at its slot and inserts ``a`` new ones there:

    cup / left cusp   r=0 a=2   (two new strands at k, k+1)
    cap / right cusp  r=2 a=0   (strands k, k+1 joined)
    crossing          r=2 a=2   (strands k and k+1 swapped)

The traversal starts on the lower strand of the first cup, moving right.
"""
from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Iterator

FRONT_KINDS = ("L", "R", "X")
DIAGRAM_KINDS = ("Cup", "Cap", "Xp", "Xn")
SINGULAR_KINDS = DIAGRAM_KINDS + ("Xd",)

OPENERS = frozenset({"L", "Cup"})
CLOSERS = frozenset({"R", "Cap"})
CROSSINGS = frozenset({"X", "Xp", "Xn", "Xd"})

CROSS_SIGN = {"Xp": 1, "Xn": -1}
SIGN_TOKEN = {1: "Xp", -1: "Xn"}

Event = tuple[str, int]


class WordError(ValueError):
    """Raised for words that fail to parse or validate."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at event {position})"
        super().__init__(message)


def footprint(event: Event) -> tuple[int, int, int]:
    """Return ``(slot, removed, inserted)`` for an event."""
    kind, k = event
    if kind in OPENERS:
        return k, 0, 2
    if kind in CLOSERS:
        return k, 2, 0
    return k, 2, 2


_TOKEN_RE = re.compile(r"^(Cup|Cap|Xp|Xn|Xd|L|R|X)([1-9][0-9]*)$")


def _tokenize(text: str, allowed: tuple[str, ...]) -> tuple[Event, ...]:
    text = text.strip()
    if not text:
        raise WordError("empty word")
    events = []
    for pos, tok in enumerate(text.split(" ")):
        m = _TOKEN_RE.match(tok)
        if m is None or m.group(1) not in allowed:
            raise WordError(f"syntax error: unexpected token {tok!r}", pos)
        events.append((m.group(1), int(m.group(2))))
    return tuple(events)


def column_sizes(events: Iterable[Event]) -> list[int]:
    """Strand counts of every column; raises on slot or closure errors."""
    sizes = [0]
    n = 0
    for pos, ev in enumerate(events):
        k, r, a = footprint(ev)
        if r == 0:
            if not 1 <= k <= n + 1:
                raise WordError(f"slot out of range: {ev[0]}{k} with {n} strands", pos)
        elif k < 1 or k + 1 > n:
            raise WordError(f"slot out of range: {ev[0]}{k} with {n} strands", pos)
        n += a - r
        sizes.append(n)
    if n != 0:
        raise WordError(f"strand count does not close: {n} strands remain")
    return sizes


@dataclass(frozen=True)
class Passage:
    """One pass of the traversal through an event.

    ``role`` is ``"A"`` for the strand entering a crossing at its lower-left
    slot, ``"B"`` for the upper-left one, ``"lower"``/``"upper"`` for the
    branch on which a turn (cup, cap, cusp) is entered.  ``direction`` is +1
    when moving right.
    """

    index: int
    role: str
    direction: int


@dataclass(frozen=True)
class Traversal:
    passages: tuple[Passage, ...]
    segments: int
    visited: int
    directions: dict = field(default_factory=dict, compare=False)

    @property
    def components_ok(self) -> bool:
        return self.visited == self.segments


def _skeleton_kind(kind: str) -> str:
    return "Cup" if kind in OPENERS else "Cap" if kind in CLOSERS else "X"


def traverse(events: tuple[Event, ...]) -> Traversal:
    """Walk the single component through the word from its first turn.

    The walk only sees which events open, close or cross, so it is shared
    between words with the same skeleton.
    """
    try:
        return _traverse_skeleton(tuple((_skeleton_kind(k), s) for k, s in events))
    except WordError:
        column_sizes(events)  # re-raise naming the original tokens
        raise


@lru_cache(maxsize=65536)
def _traverse_skeleton(events: tuple[Event, ...]) -> Traversal:
    sizes = column_sizes(events)
    if not events:
        raise WordError("empty word")
    start = (1, events[0][1], 1)
    col, s, d = start
    passages = []
    visited = 0
    total = sum(sizes)
    directions = {}
    while True:
        visited += 1
        directions[(col, s)] = d
        if d == 1:
            kind, k = events[col]
            if kind in CROSSINGS:
                if s == k:
                    passages.append(Passage(col, "A", 1))
                    col, s = col + 1, k + 1
                elif s == k + 1:
                    passages.append(Passage(col, "B", 1))
                    col, s = col + 1, k
                else:
                    col += 1
            elif kind in CLOSERS:
                if s in (k, k + 1):
                    passages.append(Passage(col, "lower" if s == k else "upper", 1))
                    s = k + 1 if s == k else k
                    d = -1
                else:
                    col, s = col + 1, s if s < k else s - 2
            else:
                col, s = col + 1, s if s < k else s + 2
        else:
            kind, k = events[col - 1]
            if kind in CROSSINGS:
                if s == k:
                    passages.append(Passage(col - 1, "B", -1))
                    col, s = col - 1, k + 1
                elif s == k + 1:
                    passages.append(Passage(col - 1, "A", -1))
                    col, s = col - 1, k
                else:
                    col -= 1
            elif kind in OPENERS:
                if s in (k, k + 1):
                    passages.append(Passage(col - 1, "lower" if s == k else "upper", -1))
                    s = k + 1 if s == k else k
                    d = 1
                else:
                    col, s = col - 1, s if s < k else s - 2
            else:
                col, s = col - 1, s if s < k else s + 2
        if (col, s, d) == start:
            break
        if visited > total:
            raise AssertionError("traversal did not close")
    return Traversal(tuple(passages), total, visited, directions)


def crossing_directions(tr: Traversal) -> dict[int, tuple[int, int]]:
    """Map crossing index -> (direction of strand A, direction of strand B)."""
    a: dict[int, int] = {}
    b: dict[int, int] = {}
    for p in tr.passages:
        if p.role == "A":
            a[p.index] = p.direction
        elif p.role == "B":
            b[p.index] = p.direction
    return {i: (a[i], b[i]) for i in a}


def turn_half_rotation(kind: str, p: Passage) -> int:
    """Counterclockwise (+1) or clockwise (-1) half turn at a cup/cap."""
    if kind in CLOSERS:
        return 1 if p.role == "lower" else -1
    return 1 if p.role == "upper" else -1


def cusp_is_down(kind: str, p: Passage) -> bool:
    """A cusp is traversed downward when entered on its upper branch."""
    return p.role == "upper"


class _Word:
    kinds: tuple[str, ...] = ()
    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple((str(k), int(s)) for k, s in self.events))
        for pos, (kind, _) in enumerate(self.events):
            if kind not in self.kinds:
                raise WordError(f"token kind {kind!r} not allowed in {type(self).__name__}", pos)
        tr = traverse(self.events)
        if not tr.components_ok:
            raise WordError("word traces more than one component")
        object.__setattr__(self, "_traversal", tr)

    @property
    def traversal(self) -> Traversal:
        return self._traversal  # type: ignore[attr-defined]

    def serialize(self) -> str:
        return " ".join(f"{k}{s}" for k, s in self.events)

    __str__ = serialize

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    @property
    def crossing_count(self) -> int:
        return sum(1 for k, _ in self.events if k in CROSSINGS)

    def direction_at(self, column: int, slot: int) -> int:
        """Traversal direction (+1 right) of the strand at a column slot."""
        try:
            return self.traversal.directions[(column, slot)]
        except KeyError:
            raise WordError(f"no strand at column {column}, slot {slot}") from None

    def columns(self) -> list[int]:
        return column_sizes(self.events)

    def replace(self, events: Iterable[Event]):
        return type(self)(tuple(events))


@dataclass(frozen=True)
class FrontWord(_Word):
    """Front of a Legendrian knot: cusps and (unsigned) crossings."""

    events: tuple[Event, ...]
    kinds = FRONT_KINDS

    def crossing_signs(self) -> dict[int, int]:
        # the lesser-slope strand (B, entering from the upper left) is over
        return {i: a * b for i, (a, b) in crossing_directions(self.traversal).items()}

    def cusps(self) -> list[tuple[int, bool]]:
        """(event index, is_down) for every cusp, in traversal order."""
        out = []
        for p in self.traversal.passages:
            kind = self.events[p.index][0]
            if kind in ("L", "R"):
                out.append((p.index, cusp_is_down(kind, p)))
        return out


@dataclass(frozen=True)
class DiagramWord(_Word):
    """Blackboard-framed planar diagram with signed crossings."""

    events: tuple[Event, ...]
    kinds = DIAGRAM_KINDS

    def a_over(self) -> dict[int, bool]:
        """For each crossing, whether the lower-left strand A passes over."""
        out = {}
        for i, (a, b) in crossing_directions(self.traversal).items():
            sign = CROSS_SIGN.get(self.events[i][0], 0)
            out[i] = sign == -a * b
        return out


@dataclass(frozen=True)
class SingularDiagramWord(_Word):
    """Diagram word that may carry transverse double points ``Xd``."""

    events: tuple[Event, ...]
    kinds = SINGULAR_KINDS

    @property
    def double_point_count(self) -> int:
        return sum(1 for k, _ in self.events if k == "Xd")

    def double_points(self) -> list[int]:
        return [i for i, (k, _) in enumerate(self.events) if k == "Xd"]


def parse_front(text: str) -> FrontWord:
    return FrontWord(_tokenize(text, FRONT_KINDS))


def parse_diagram(text: str) -> DiagramWord:
    return DiagramWord(_tokenize(text, DIAGRAM_KINDS))


def parse_singular(text: str) -> SingularDiagramWord:
    return SingularDiagramWord(_tokenize(text, SINGULAR_KINDS))


def parse_any(text: str) -> FrontWord | DiagramWord | SingularDiagramWord:
    """Dispatch on token vocabulary."""
    toks = text.split()
    if toks and all(re.match(r"^[LRX][0-9]+$", t) for t in toks):
        return parse_front(text)
    if any(t.startswith("Xd") for t in toks):
        return parse_singular(text)
    return parse_diagram(text)


def read_words(text: str) -> list[str]:
    """Non-comment, non-blank lines of a word file."""
    return [ln.strip() for ln in text.split("\n") if ln.strip() and not ln.lstrip().startswith("#")]

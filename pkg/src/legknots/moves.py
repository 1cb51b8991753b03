"""Legal moves on front and diagram words, kinks, cusp pairs, stabilization.

Diagram words only ever get regular-isotopy moves from
:func:`applicable_moves` (planar moves, R2, R3).  The first Reidemeister
move is not among them; kinks enter only through :func:`insert_kink`.

Move basis for diagram words (``index`` is the first event touched):

    Commute        swap two adjacent events acting on disjoint strands
    CupCapCancel   remove an adjacent zigzag  Cup(k) Cap(k+1) / Cup(k+1) Cap(k)
    CupCapIntro    insert such a zigzag on the strand at ``slot`` of column ``index``
    Slide          Cup(k) X(k+1) <-> Cup(k+1) X(k),  X(k+1) Cap(k) <-> X(k) Cap(k+1)
    R2Elim         remove X(k) X(k) of opposite signs
    R2Intro        insert X(k) X(k) of opposite signs at column ``index``
    R3             X(k) X(k+1) X(k) <-> X(k+1) X(k) X(k+1) when a top strand exists

Search certificates may also contain ``Planar 0 0 <word>`` steps, with the
target word's tokens joined by commas.  Such a step replaces the word by
any word with the same plane diagram (see :mod:`legknots.plane`), i.e. it
stands for a planar isotopy that is checked rather than spelled out.

Front words get Commute and the three Legendrian front moves:

    FrontMoveI     fishtail  L(s+1) X(s) R(s+1) / L(s) X(s+1) R(s)  <-> plain strand
    FrontMoveII    a strand passes a cusp tip, adding or removing two crossings
    FrontMoveIII   triple point  X(k) X(k+1) X(k) <-> X(k+1) X(k) X(k+1)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .model import (
    CROSS_SIGN,
    CROSSINGS,
    SIGN_TOKEN,
    DiagramWord,
    Event,
    FrontWord,
    SingularDiagramWord,
    WordError,
    footprint,
)

KIND_ORDER = (
    "Commute", "CupCapCancel", "CupCapIntro", "Slide", "R2Elim", "R2Intro", "R3",
    "FrontMoveI", "FrontMoveII", "FrontMoveIII",
    "KinkInsert", "KinkCancelPair", "CuspPairInsert", "Planar",
)
PLANAR_KINDS = frozenset({"Commute", "CupCapCancel", "CupCapIntro", "Slide"})
REGULAR_KINDS = PLANAR_KINDS | {"R2Elim", "R2Intro", "R3"}
FRONT_MOVE_KINDS = frozenset({"Commute", "FrontMoveI", "FrontMoveII", "FrontMoveIII"})

KINK_TYPES = ((1, 1), (1, -1), (-1, -1), (-1, 1))


class MoveError(ValueError):
    """Raised when a move does not apply to the word it targets."""


@dataclass(frozen=True)
class Move:
    kind: str
    index: int
    slot: int
    variant: str = ""

    def sort_key(self):
        return (KIND_ORDER.index(self.kind), self.index, self.slot, self.variant)

    def serialize(self) -> str:
        parts = [self.kind, str(self.index), str(self.slot)]
        if self.variant:
            parts.append(self.variant)
        return " ".join(parts)

    @classmethod
    def parse(cls, line: str) -> "Move":
        parts = line.split()
        if len(parts) not in (3, 4) or parts[0] not in KIND_ORDER:
            raise MoveError(f"malformed move line: {line!r}")
        return cls(parts[0], int(parts[1]), int(parts[2]), parts[3] if len(parts) == 4 else "")


@dataclass(frozen=True)
class MoveTrace:
    start: object
    moves: tuple[Move, ...]
    end: object

    def replay(self):
        w = self.start
        for m in self.moves:
            w = apply_move(w, m)
        return w

    def verify(self) -> bool:
        return self.replay() == self.end

    def serialize(self) -> str:
        return "".join(m.serialize() + "\n" for m in self.moves)


def parse_trace(text: str) -> list[Move]:
    return [Move.parse(ln) for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


# ---------------------------------------------------------------- templates

def kink_template(kink: tuple[int, int], slot: int, direction: int, cross=SIGN_TOKEN) -> list[Event]:
    """Three events adding a curl to the strand at ``slot``.

    The loop sits above the strand (``Cup(s+1) X(s) Cap(s+1)``) or below it
    (``Cup(s) X(s+1) Cap(s)``); it turns counterclockwise exactly when it
    is above a right-moving strand or below a left-moving one.
    """
    drot, dw = kink
    if (drot, dw) not in KINK_TYPES:
        raise ValueError(f"not a kink type: {kink}")
    above = (drot == 1) == (direction == 1)
    x = cross[dw]
    if above:
        return [("Cup", slot + 1), (x, slot), ("Cap", slot + 1)]
    return [("Cup", slot), (x, slot + 1), ("Cap", slot)]


def match_kink(events, i: int) -> tuple[int, str, int] | None:
    """If events[i:i+3] is a kink template return (host slot, shape, crossing token)."""
    if i < 0 or i + 3 > len(events):
        return None
    (k0, s0), (k1, s1), (k2, s2) = events[i:i + 3]
    if k0 != "Cup" or k2 != "Cap" or k1 not in CROSSINGS:
        return None
    if s0 == s2 and s1 == s0 - 1:
        return s1, "above", k1
    if s0 == s2 and s1 == s0 + 1:
        return s0, "below", k1
    return None


def _check_strand(w, column: int, slot: int) -> int:
    sizes = w.columns()
    if not 0 <= column < len(sizes) or not 1 <= slot <= sizes[column]:
        raise MoveError(f"no strand at column {column}, slot {slot}")
    return w.direction_at(column, slot)


def insert_kink(d: DiagramWord, kink: tuple[int, int], column: int, slot: int):
    """Add one kink of the given (rotation, writhe) type on an arc of ``d``."""
    direction = _check_strand(d, column, slot)
    ev = list(d.events)
    ev[column:column] = kink_template(tuple(kink), slot, direction)
    return d.replace(ev)


def stabilization_kinks(i: int, j: int) -> list[tuple[int, int]]:
    kinks = [(1, 1)] * i if i >= 0 else [(-1, -1)] * -i
    kinks += [(-1, 1)] * j if j >= 0 else [(1, -1)] * -j
    return kinks


def stabilize(d: DiagramWord, s: tuple[int, int]):
    """(i, j)-stabilization.

    The i-kinks sit on the strand leaving the base point and the j-kinks on
    the strand returning to it, so repeated stabilization keeps kinks of one
    family next to each other.
    """
    i, j = s
    slot = d.events[0][1]
    block: list[Event] = []
    for kink in stabilization_kinks(i, 0):
        block += kink_template(kink, slot, 1)
    for kink in stabilization_kinks(0, j):
        block += kink_template(kink, slot + 1, -1)
    ev = list(d.events)
    ev[1:1] = block
    return d.replace(ev)


def cusp_pair_template(cusp_type: int, slot: int, direction: int) -> list[Event]:
    """Zigzag on a front strand; type 1 lowers the Maslov number, type 2 raises it."""
    if cusp_type not in (1, 2):
        raise ValueError("cusp pair type must be 1 or 2")
    z_shape = (cusp_type == 1) == (direction == 1)
    if z_shape:
        return [("L", slot + 1), ("R", slot)]
    return [("L", slot), ("R", slot + 1)]


def insert_cusp_pair(f: FrontWord, cusp_type: int, column: int, slot: int) -> FrontWord:
    direction = _check_strand(f, column, slot)
    ev = list(f.events)
    ev[column:column] = cusp_pair_template(cusp_type, slot, direction)
    return f.replace(ev)


def insert_singular_kink(sd: SingularDiagramWord, kink, column: int, slot: int) -> SingularDiagramWord:
    return insert_kink(sd, kink, column, slot)  # type: ignore[arg-type]


def pull_kink_through_double_point(sd: SingularDiagramWord, index: int) -> SingularDiagramWord:
    """Move a kink adjacent to the double point at ``index`` to its other side."""
    kind, k = sd.events[index]
    if kind != "Xd":
        raise MoveError(f"event {index} is not a double point")
    ev = list(sd.events)
    before = match_kink(ev, index - 3)
    if before is not None and before[0] in (k, k + 1):
        host, shape, x = before
        new_host = k + 1 if host == k else k
        tmpl = _shape_template(shape, new_host, x)
        del ev[index - 3:index]
        ev[index - 2:index - 2] = tmpl
        return sd.replace(ev)
    after = match_kink(ev, index + 1)
    if after is not None and after[0] in (k, k + 1):
        host, shape, x = after
        new_host = k + 1 if host == k else k
        tmpl = _shape_template(shape, new_host, x)
        del ev[index + 1:index + 4]
        ev[index:index] = tmpl
        return sd.replace(ev)
    raise MoveError(f"no kink adjacent to the double point at event {index}")


def _shape_template(shape: str, slot: int, x: str) -> list[Event]:
    if shape == "above":
        return [("Cup", slot + 1), (x, slot), ("Cap", slot + 1)]
    return [("Cup", slot), (x, slot + 1), ("Cap", slot)]


# ---------------------------------------------------------------- commute

def commute_options(e1: Event, e2: Event) -> list[tuple[str, Event, Event]]:
    """Ways to swap adjacent events acting on disjoint strands.

    Returns ``(variant, new_first, new_second)``; the variant is only
    non-empty when a cap followed by a cup at the same height can be
    swapped with the cup placed either below or above.
    """
    k1, r1, a1 = footprint(e1)
    k2, r2, a2 = footprint(e2)
    out = []
    below = k2 + r2 <= k1
    above = k2 >= k1 + a1
    ambiguous = below and above
    if below:
        out.append(("below" if ambiguous else "", (e2[0], k2), (e1[0], k1 + a2 - r2)))
    if above:
        out.append(("above" if ambiguous else "", (e2[0], k2 - a1 + r1), (e1[0], k1)))
    return out


# ---------------------------------------------------------------- R3 helpers

def _triple_strands(events, i: int):
    """Strand ids (0 bottom .. 2 top) at each crossing of a triple, as (A, B)."""
    k = min(events[i][1], events[i + 1][1])
    order = [0, 1, 2]
    pairs = []
    for j in range(3):
        s = events[i + j][1] - k
        pairs.append((order[s], order[s + 1]))
        order[s], order[s + 1] = order[s + 1], order[s]
    return pairs


def r3_allowed(d: DiagramWord, i: int) -> bool:
    over = d.a_over()
    beats = set()
    for j, (a, b) in enumerate(_triple_strands(d.events, i)):
        beats.add((a, b) if over[i + j] else (b, a))
    # cyclic tournament on three strands cannot be moved
    return not ({(0, 1), (1, 2), (2, 0)} <= beats or {(1, 0), (2, 1), (0, 2)} <= beats)


def _is_triple(events, i: int) -> bool:
    if i + 3 > len(events):
        return False
    (t0, s0), (t1, s1), (t2, s2) = events[i:i + 3]
    if not (t0 in CROSSINGS and t1 in CROSSINGS and t2 in CROSSINGS):
        return False
    return s0 == s2 and abs(s1 - s0) == 1


# ---------------------------------------------------------------- enumeration

def _keeps_orientation(w, first: Event) -> bool:
    # the base point rides on the first cup; a swap that promotes another
    # cup is only allowed if that cup's lower branch already runs rightward
    if first[0] not in ("Cup", "L"):
        return False
    return w.direction_at(2, w.events[1][1]) == 1


def _is_front(w) -> bool:
    return isinstance(w, FrontWord)


def applicable_moves(w) -> list[Move]:
    """All moves of the word's move basis, sorted by kind then location."""
    ev = w.events
    sizes = w.columns()
    moves: list[Move] = []
    for i in range(len(ev) - 1):
        for variant, first, _ in commute_options(ev[i], ev[i + 1]):
            if i == 0 and not _keeps_orientation(w, first):
                continue
            moves.append(Move("Commute", i, ev[i][1], variant))
    if _is_front(w):
        moves += _front_moves(w, sizes)
    elif isinstance(w, DiagramWord):
        moves += _diagram_moves(w, sizes)
    moves.sort(key=Move.sort_key)
    return moves


def _diagram_moves(d: DiagramWord, sizes) -> list[Move]:
    ev = d.events
    out = []
    for i in range(len(ev) - 1):
        (t0, s0), (t1, s1) = ev[i], ev[i + 1]
        if t0 == "Cup" and t1 == "Cap" and abs(s0 - s1) == 1:
            out.append(Move("CupCapCancel", i, s0))
        if (t0 == "Cup" and t1 in CROSS_SIGN and abs(s0 - s1) == 1) or (
            t0 in CROSS_SIGN and t1 == "Cap" and abs(s0 - s1) == 1
        ):
            out.append(Move("Slide", i, s0))
        if t0 in CROSS_SIGN and t1 in CROSS_SIGN and s0 == s1 and t0 != t1:
            out.append(Move("R2Elim", i, s0))
    for c, n in enumerate(sizes):
        if c == 0 or c == len(sizes) - 1:
            continue
        for s in range(1, n + 1):
            out.append(Move("CupCapIntro", c, s, "down"))
            out.append(Move("CupCapIntro", c, s, "up"))
        for s in range(1, n):
            out.append(Move("R2Intro", c, s, "np"))
            out.append(Move("R2Intro", c, s, "pn"))
    for i in range(len(ev) - 2):
        if _is_triple(ev, i) and r3_allowed(d, i):
            out.append(Move("R3", i, ev[i][1]))
    return out


def _front_moves(f: FrontWord, sizes) -> list[Move]:
    ev = f.events
    out = []
    for i in range(len(ev) - 2):
        if match_fishtail(ev, i):
            out.append(Move("FrontMoveI", i, ev[i + 1][1], "elim"))
        if _is_triple(ev, i):
            out.append(Move("FrontMoveIII", i, ev[i][1]))
        v = match_cusp_pass(ev, i)
        if v:
            out.append(Move("FrontMoveII", i, ev[i][1], v))
    for c, n in enumerate(sizes):
        if c == 0 or c == len(sizes) - 1:
            continue
        for s in range(1, n + 1):
            out.append(Move("FrontMoveI", c, s, "down"))
            out.append(Move("FrontMoveI", c, s, "up"))
    for i, (t, k) in enumerate(ev):
        n_left = sizes[i]
        if t == "L":
            if k <= n_left:
                out.append(Move("FrontMoveII", i, k, "pass-above"))
            if k >= 2:
                out.append(Move("FrontMoveII", i, k, "pass-below"))
        elif t == "R":
            if k + 2 <= n_left:
                out.append(Move("FrontMoveII", i, k, "pass-above"))
            if k >= 2:
                out.append(Move("FrontMoveII", i, k, "pass-below"))
    return out


def match_fishtail(ev, i: int) -> bool:
    if i + 3 > len(ev):
        return False
    (t0, s0), (t1, s1), (t2, s2) = ev[i:i + 3]
    if (t0, t1, t2) != ("L", "X", "R") or s0 != s2:
        return False
    return s1 in (s0 - 1, s0 + 1)


def fishtail_template(slot: int, variant: str) -> list[Event]:
    if variant == "up":
        return [("L", slot + 1), ("X", slot), ("R", slot + 1)]
    return [("L", slot), ("X", slot + 1), ("R", slot)]


# A strand passing a cusp tip.  Left cusp at k with the strand above it
# (strand at slot k of the left column) becomes L(k+1) X(k) X(k+1); with the
# strand below (slot k-1) L(k) becomes L(k-1) X(k) X(k-1).  Mirror images
# for right cusps.

def match_cusp_pass(ev, i: int) -> str:
    if i + 3 > len(ev):
        return ""
    (t0, s0), (t1, s1), (t2, s2) = ev[i:i + 3]
    if t0 == "L" and t1 == "X" and t2 == "X":
        if s1 == s0 - 1 and s2 == s0:
            return "unpass-above"
        if s1 == s0 + 1 and s2 == s0:
            return "unpass-below"
    if t0 == "X" and t1 == "X" and t2 == "R":
        if s0 == s2 and s1 == s2 - 1:
            return "unpass-above"
        if s0 == s2 and s1 == s2 + 1:
            return "unpass-below"
    return ""


def _apply_front_ii(ev: list, m: Move) -> list:
    i, v = m.index, m.variant
    t, k = ev[i]
    if v == "pass-above" and t == "L":
        ev[i:i + 1] = [("L", k + 1), ("X", k), ("X", k + 1)]
    elif v == "pass-below" and t == "L":
        ev[i:i + 1] = [("L", k - 1), ("X", k), ("X", k - 1)]
    elif v == "pass-above" and t == "R":
        ev[i:i + 1] = [("X", k + 1), ("X", k), ("R", k + 1)]
    elif v == "pass-below" and t == "R":
        ev[i:i + 1] = [("X", k - 1), ("X", k), ("R", k - 1)]
    elif v == "unpass-above" and t == "L":
        ev[i:i + 3] = [("L", k - 1)]
    elif v == "unpass-below" and t == "L":
        ev[i:i + 3] = [("L", k + 1)]
    elif v == "unpass-above":
        ev[i:i + 3] = [("R", ev[i + 2][1] - 1)]
    elif v == "unpass-below":
        ev[i:i + 3] = [("R", ev[i + 2][1] + 1)]
    else:
        raise MoveError(f"bad FrontMoveII variant {v!r}")
    return ev


def _r3_rewrite(ev: list, i: int) -> list:
    (t0, s0), (t1, s1), (t2, _) = ev[i:i + 3]
    ev[i:i + 3] = [(t2, s1), (t1, s0), (t0, s1)]
    return ev


# ---------------------------------------------------------------- apply

def planar_step(target) -> Move:
    return Move("Planar", 0, 0, ",".join(f"{k}{s}" for k, s in target.events))


def _apply_planar(w, m: Move):
    from .model import parse_diagram
    from .plane import plane_diagram

    if not isinstance(w, DiagramWord):
        raise MoveError("planar steps apply to diagram words only")
    try:
        target = parse_diagram(m.variant.replace(",", " "))
    except WordError as exc:
        raise MoveError(f"bad planar step target: {exc}") from None
    if plane_diagram(target).key != plane_diagram(w).key:
        raise MoveError(f"{target.serialize()!r} is not planar isotopic to {w.serialize()!r}")
    return target


def apply_move(w, m: Move):
    """Apply ``m``; raises :class:`MoveError` unless it is applicable."""
    if m.kind == "Planar":
        return _apply_planar(w, m)
    if m not in applicable_moves(w):
        raise MoveError(f"move {m.serialize()!r} is not applicable to {w.serialize()!r}")
    return _apply_unchecked(w, m)


def _apply_unchecked(w, m: Move):
    ev = list(w.events)
    i = m.index
    if m.kind == "Commute":
        for variant, a, b in commute_options(ev[i], ev[i + 1]):
            if variant == m.variant:
                ev[i:i + 2] = [a, b]
                break
    elif m.kind == "CupCapCancel" or m.kind == "R2Elim":
        del ev[i:i + 2]
    elif m.kind == "CupCapIntro":
        s = m.slot
        ev[i:i] = [("Cup", s + 1), ("Cap", s)] if m.variant == "up" else [("Cup", s), ("Cap", s + 1)]
    elif m.kind == "Slide":
        (t0, s0), (t1, s1) = ev[i], ev[i + 1]
        ev[i:i + 2] = [(t0, s1), (t1, s0)]
    elif m.kind == "R2Intro":
        a, b = ("Xn", "Xp") if m.variant == "np" else ("Xp", "Xn")
        ev[i:i] = [(a, m.slot), (b, m.slot)]
    elif m.kind in ("R3", "FrontMoveIII"):
        _r3_rewrite(ev, i)
    elif m.kind == "FrontMoveI":
        if m.variant == "elim":
            del ev[i:i + 3]
        else:
            ev[i:i] = fishtail_template(m.slot, m.variant)
    elif m.kind == "FrontMoveII":
        _apply_front_ii(ev, m)
    else:
        raise MoveError(f"{m.kind} is not a word move; use the dedicated operation")
    return w.replace(ev)


def successors(w, kinds: Iterable[str] | None = None):
    """(move, word) pairs for every applicable move, optionally filtered by kind."""
    allowed = None if kinds is None else set(kinds)
    for m in applicable_moves(w):
        if allowed is None or m.kind in allowed:
            yield m, _apply_unchecked(w, m)

"""Bounded isotopy search with replayable certificates.

States are plane diagrams (:mod:`legknots.plane`), so planar isotopy costs
nothing and the depth of a search counts Reidemeister moves only.  A path
found between plane diagrams is turned back into words: each R-move is
performed as a word move on a layout of its diagram in which the move is
local, and consecutive words are joined by ``Planar`` steps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import whitney_rotation, writhe
from .layout import LayoutError, layout
from .model import OPENERS, DiagramWord, Event, footprint, traverse
from .moves import Move, MoveError, MoveTrace, apply_move, planar_step, stabilize
from .plane import PlaneDiagram, PlaneMove, plane_diagram


@dataclass(frozen=True)
class SearchBudget:
    max_crossings: int = 8
    max_depth: int = 8
    max_states: int = 200_000

    def __post_init__(self):
        for name in ("max_crossings", "max_depth", "max_states"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class Equivalent:
    trace: MoveTrace
    states_visited: int
    depth: int  # Reidemeister moves in the trace
    outcome: str = field(default="Equivalent", init=False)


@dataclass(frozen=True)
class NotEquivalent:
    reason: str
    states_visited: int = 0
    outcome: str = field(default="NotEquivalent", init=False)


@dataclass(frozen=True)
class Inconclusive:
    states_visited: int
    outcome: str = field(default="Inconclusive", init=False)


SearchResult = Equivalent | NotEquivalent | Inconclusive


def result_json(r: SearchResult) -> dict:
    out: dict = {"outcome": r.outcome}
    if isinstance(r, Equivalent):
        out["trace"] = [m.serialize() for m in r.trace.moves]
        out["depth"] = r.depth
    if isinstance(r, NotEquivalent):
        out["reason"] = r.reason
    out["statesVisited"] = r.states_visited
    return out


# ---------------------------------------------------------------- canonical form

_KIND_RANK = {"Cup": 0, "Cap": 1, "Xp": 2, "Xn": 3, "Xd": 4}


class _Faces:
    """Union-find over the gaps of a word's columns."""

    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def _port_graph(events):
    col: list = []
    ins, outs = {}, {}
    for i, ev in enumerate(events):
        k, r, a = footprint(ev)
        ins[i] = tuple(col[k - 1:k - 1 + r])
        outs[i] = tuple((i, p) for p in range(a))
        col[k - 1:k - 1 + r] = list(outs[i])
    directions = traverse(tuple(events)).directions
    dirs = {}
    col = []
    for i, ev in enumerate(events):
        k, r, a = footprint(ev)
        col[k - 1:k - 1 + r] = list(outs[i])
        for s, e in enumerate(col):
            dirs[e] = directions[(i + 1, s + 1)]
    return ins, outs, dirs


def _face_structure(events, outs):
    uf = _Faces()
    lower, upper, outer, inner = {}, {}, {}, {}
    n = 0
    col: list = []
    for c, ev in enumerate(events):
        k, r, a = footprint(ev)
        for g in range(n + 1):
            if g < k - 1:
                uf.union((c, g), (c + 1, g))
            elif g > k - 1 + r:
                uf.union((c, g), (c + 1, g - r + a))
        if r == 0:
            uf.union((c, k - 1), (c + 1, k - 1))
            uf.union((c, k - 1), (c + 1, k + 1))
            outer[c] = (c, k - 1)
            inner[c] = (c + 1, k)
        elif a == 0:
            uf.union((c, k - 1), (c + 1, k - 1))
            uf.union((c, k + 1), (c + 1, k - 1))
            inner[c] = (c, k)
        else:
            uf.union((c, k - 1), (c + 1, k - 1))
            uf.union((c, k + 1), (c + 1, k + 1))
            inner[c] = (c, k)
        col[k - 1:k - 1 + r] = list(outs[c])
        n = len(col)
        for j, e in enumerate(col):
            lower[e] = (c + 1, j)
            upper[e] = (c + 1, j + 1)
    f = uf.find
    return (
        {e: f(v) for e, v in lower.items()},
        {e: f(v) for e, v in upper.items()},
        {i: f(v) for i, v in outer.items()},
        {i: f(v) for i, v in inner.items()},
        f((0, 0)),
    )


def canonical_form(w: DiagramWord) -> DiagramWord:
    """Least word, ordered by (slot, kind) letter by letter, among all words
    reachable from ``w`` by Commute moves.

    The Commute class of a word is the set of sweep orders of one planar
    port graph; a memoized search over partial sweeps picks the least one
    without listing the class.
    """
    return w.replace(_canonical_events(w.events))


_CANON_CACHE: dict = {}


def _canonical_events(events: tuple[Event, ...]) -> tuple[Event, ...]:
    if events in _CANON_CACHE:
        return _CANON_CACHE[events]
    ins, outs, dirs = _port_graph(events)
    lower, upper, outer, inner, unbounded = _face_structure(events, outs)
    n = len(events)
    full = (1 << n) - 1
    cups = [i for i in range(n) if events[i][0] in OPENERS]
    memo: dict = {}

    def gap_face(col, g):
        if not col:
            return unbounded
        return lower[col[0]] if g == 0 else upper[col[g - 1]]

    def best(mask, col):
        if mask == full:
            return ()
        key = (mask, col)
        if key in memo:
            return memo[key]
        pending = {outer[i] for i in cups if not mask >> i & 1}
        options = []
        for i in range(n):
            if mask >> i & 1:
                continue
            kind = events[i][0]
            if kind in OPENERS:
                # the first cup carries the base point and must keep it rightward
                if mask == 0 and dirs[(i, 0)] != 1:
                    continue
                for g in range(len(col) + 1):
                    if gap_face(col, g) == outer[i]:
                        options.append(((kind, g + 1), i, col[:g] + outs[i] + col[g:]))
            else:
                a = ins[i]
                for j in range(len(col) - 1):
                    if col[j] == a[0] and col[j + 1] == a[1]:
                        nc = col[:j] + outs[i] + col[j + 2:]
                        # closing off a face that a later cup still has to open in
                        if inner[i] in pending and all(
                            gap_face(nc, g) != inner[i] for g in range(len(nc) + 1)
                        ):
                            continue
                        options.append(((kind, j + 1), i, nc))
        options.sort(key=lambda t: (t[0][1], _KIND_RANK[t[0][0]]))
        result = None
        j = 0
        while j < len(options) and result is None:
            letter = options[j][0]
            while j < len(options) and options[j][0] == letter:
                _, i, nc = options[j]
                j += 1
                rest = best(mask | 1 << i, nc)
                if rest is not None and (result is None or rest < result[1:]):
                    result = (letter,) + rest
        memo[key] = result
        return result

    out = best(0, ())
    if out is None:
        raise AssertionError("no sweep order found")
    if len(_CANON_CACHE) > 50_000:
        _CANON_CACHE.clear()
    _CANON_CACHE[events] = out
    return out


# ---------------------------------------------------------------- search

@dataclass
class _Node:
    diagram: PlaneDiagram
    depth: int
    parent: str | None = None  # key of the parent state
    move: PlaneMove | None = None


def _order(d: PlaneDiagram):
    return (d.n, d.key)


def search_equivalent(a: DiagramWord, b: DiagramWord, budget: SearchBudget | None = None) -> SearchResult:
    """Look for a sequence of R2/R3 moves (up to planar isotopy) from ``a`` to ``b``.

    Breadth first from both ends, always growing the smaller frontier, with
    states in every layer ordered by crossing count and canonical key.
    ``max_depth`` bounds the number of Reidemeister moves; no state with
    more than ``max_crossings`` crossings is visited.
    """
    budget = budget or SearchBudget()
    if writhe(a) != writhe(b):
        return NotEquivalent("writhe")
    if whitney_rotation(a) != whitney_rotation(b):
        return NotEquivalent("rotation")
    A, B = plane_diagram(a), plane_diagram(b)
    if A.key == B.key:
        moves = () if a == b else (planar_step(b),)
        return Equivalent(MoveTrace(a, moves, b), 1 if a == b else 2, 0)
    if max(A.n, B.n) > budget.max_crossings:
        return Inconclusive(0)
    found = _bidirectional(A, B, budget)
    if isinstance(found, int):
        return Inconclusive(found)
    steps, visited = found
    try:
        moves = _realize(a, b, steps)
    except (LayoutError, MoveError):
        return Inconclusive(visited)
    trace = MoveTrace(a, tuple(moves), b)
    if not trace.verify():
        return Inconclusive(visited)
    return Equivalent(trace, visited, len(steps))


def _bidirectional(A: PlaneDiagram, B: PlaneDiagram, budget: SearchBudget):
    sides = ({A.key: _Node(A, 0)}, {B.key: _Node(B, 0)})
    frontiers = ([A], [B])
    depths = [0, 0]
    while depths[0] + depths[1] < budget.max_depth:
        if not frontiers[0] or not frontiers[1]:
            break
        s = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        seen, other = sides[s], sides[1 - s]
        nxt = []
        meetings = []
        for d in frontiers[s]:
            dk = d.key
            for mv, t in d.successors():
                if t.n > budget.max_crossings:
                    continue
                tk = t.key
                if tk in seen:
                    continue
                seen[tk] = _Node(t, depths[s] + 1, dk, mv)
                nxt.append(t)
                if tk in other:
                    meetings.append(tk)
                if len(sides[0]) + len(sides[1]) > budget.max_states:
                    return len(sides[0]) + len(sides[1])
        depths[s] += 1
        nxt.sort(key=_order)
        frontiers = (nxt, frontiers[1]) if s == 0 else (frontiers[0], nxt)
        if meetings:
            paths = []
            for mk in meetings:
                total = sides[0][mk].depth + sides[1][mk].depth
                paths.append((total, _path_keys(sides, mk), mk))
            paths.sort()
            return _steps(sides, paths[0][2]), len(sides[0]) + len(sides[1])
    return len(sides[0]) + len(sides[1])


def _chain(side: dict, key):
    out = []
    while side[key].parent is not None:
        out.append(side[key])
        key = side[key].parent
    return out  # nodes from the meeting point back to the root


def _path_keys(sides, mk):
    fwd = [_order(n.diagram) for n in reversed(_chain(sides[0], mk))]
    bwd = [_order(n.diagram) for n in _chain(sides[1], mk)]
    return fwd + bwd


# A step is (kind, diagram before, diagram after, site in the diagram that
# carries the bigon or triangle).
def _steps(sides, mk):
    fwd, bwd = sides
    steps = []
    for node in reversed(_chain(fwd, mk)):
        before = fwd[node.parent].diagram
        steps.append((node.move.kind, before, node.diagram, node.move.site))
    for node in _chain(bwd, mk):
        before, after = node.diagram, bwd[node.parent].diagram
        kind = node.move.kind
        if kind == "R2Intro":
            steps.append(("R2Elim", before, after, node.move.site))
        elif kind == "R2Elim":
            steps.append(("R2Intro", before, after, node.move.site))
        else:
            steps.append(("R3", before, after, node.move.site))
    return steps


def _realize(a: DiagramWord, b: DiagramWord, steps) -> list[Move]:
    moves: list[Move] = []
    cur = a
    for kind, before, after, site in steps:
        if kind == "R3":
            edges = site
            ids = tuple(sorted({c for e in edges for c in before._edge_ends(e)}))
            lay = layout(before, ids, edges)
            u = lay.word
            m = Move("R3", lay.block_index, u.events[lay.block_index][1])
            v = apply_move(u, m)
        elif kind == "R2Elim":
            x, y = site
            lay = layout(before, (x, y), before.bigon_edges(x, y))
            u = lay.word
            m = Move("R2Elim", lay.block_index, u.events[lay.block_index][1])
            v = apply_move(u, m)
        else:
            x, y = site
            lay = layout(after, (x, y), after.bigon_edges(x, y))
            v = lay.word
            i = lay.block_index
            u = v.replace(v.events[:i] + v.events[i + 2:])
            variant = "np" if v.events[i][0] == "Xn" else "pn"
            m = Move("R2Intro", i, v.events[i][1], variant)
            if apply_move(u, m) != v:
                raise MoveError("R2Intro realization mismatch")
        if cur != u:
            moves.append(planar_step(u))
        moves.append(m)
        cur = v
    if cur != b:
        moves.append(planar_step(b))
    return moves


# ---------------------------------------------------------------- stabilization

def verify_stab_commute(d: DiagramWord, s1: tuple[int, int], s2: tuple[int, int],
                        budget: SearchBudget | None = None) -> SearchResult:
    """Search for an isotopy between the iterated and the summed stabilization.

    Opposite kinks contributed by ``s1`` and ``s2`` are cancelled one pair
    at a time: each leg runs from ``stab(stab(d, t1), t2)`` to the same word
    with ``t1`` and ``t2`` moved one step towards zero in the same entry,
    and a last leg reaches ``stab(d, s1 + s2)``.  The legs' certificates are
    joined and the whole trace is replayed.
    """
    budget = budget or SearchBudget()
    target = stabilize(d, (s1[0] + s2[0], s1[1] + s2[1]))
    t1, t2 = list(s1), list(s2)
    words = [stabilize(stabilize(d, tuple(t1)), tuple(t2))]
    for e in (0, 1):
        while t1[e] * t2[e] < 0:
            t1[e] -= 1 if t1[e] > 0 else -1
            t2[e] -= 1 if t2[e] > 0 else -1
            words.append(stabilize(stabilize(d, tuple(t1)), tuple(t2)))
    words.append(target)
    moves: list[Move] = []
    visited = depth = 0
    for a, b in zip(words, words[1:]):
        r = search_equivalent(a, b, budget)
        visited += r.states_visited
        if not isinstance(r, Equivalent):
            return r if isinstance(r, NotEquivalent) else Inconclusive(visited)
        moves.extend(r.trace.moves)
        depth += r.depth
    trace = MoveTrace(words[0], tuple(moves), target)
    if not trace.verify():
        return Inconclusive(visited)
    return Equivalent(trace, visited, depth)


def verify_stab_transport(a: DiagramWord, b: DiagramWord, s: tuple[int, int], trace,
                          budget: SearchBudget | None = None) -> SearchResult:
    """Carry a certificate for ``a ~ b`` over to the stabilized words.

    Word moves that stay clear of the base point are replayed unchanged
    behind the block of kinks; every other step (a planar step, or a move
    touching the first cup) is bridged by a bounded search.
    """
    moves = list(trace.moves) if isinstance(trace, MoveTrace) else list(trace)
    words = [a]
    try:
        for m in moves:
            words.append(apply_move(words[-1], m))
    except MoveError as exc:
        raise ValueError(f"invalid trace: {exc}") from None
    if words[-1] != b:
        raise ValueError("invalid trace: it does not end at the second word")
    shift = len(stabilize(a, s).events) - len(a.events)
    out: list[Move] = []
    visited = 0
    cur = stabilize(a, s)
    for m, nxt in zip(moves, words[1:]):
        target = stabilize(nxt, s)
        if m.kind != "Planar" and m.index > 0:
            shifted = Move(m.kind, m.index + shift, m.slot, m.variant)
            try:
                if apply_move(cur, shifted) == target:
                    out.append(shifted)
                    cur = target
                    continue
            except MoveError:
                pass
        sub = search_equivalent(cur, target, budget)
        visited += sub.states_visited
        if not isinstance(sub, Equivalent):
            return Inconclusive(visited)
        out.extend(sub.trace.moves)
        cur = target
    result = MoveTrace(stabilize(a, s), tuple(out), stabilize(b, s))
    if not result.verify():
        return Inconclusive(visited)
    depth = sum(1 for m in out if m.kind in ("R2Elim", "R2Intro", "R3"))
    return Equivalent(result, visited, depth)

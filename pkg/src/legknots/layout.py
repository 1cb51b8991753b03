"""Morse words for plane diagrams.

The diagram is subdivided (two points per edge), a hub vertex is put in
every face and joined to the subdivision points around it, and the result
is swept left to right along an st-ordering whose sink is the hub of the
unbounded face.  Every crossing then has its incoming edges next to each
other in the sweep column; crossings whose strands arrive from the wrong
side get extra cups and caps.  A group of crossings bounding a bigon or a
triangle can be laid out as one block so that the corresponding
Reidemeister move is local in the resulting word.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import SIGN_TOKEN, DiagramWord, Event
from .plane import IN, LEFT, OUT, RIGHT, PlaneDiagram


class LayoutError(ValueError):
    """Raised when no Morse word with the requested shape was found."""


@dataclass(frozen=True)
class Layout:
    word: DiagramWord
    block_index: int  # position of the first crossing of the block, or -1
    block_slot: int


HalfEdge = tuple[int, int]


def _other_end(d: PlaneDiagram, h: HalfEdge) -> HalfEdge:
    p, kind = h
    if kind == OUT:
        return ((p + 1) % d.size, IN)
    return ((p - 1) % d.size, OUT)


def _edge_of(d: PlaneDiagram, h: HalfEdge) -> int:
    p, kind = h
    return p if kind == OUT else (p - 1) % d.size


def _block_rotation(d: PlaneDiagram, block: tuple[int, ...], internal: set[int]) -> list[HalfEdge]:
    ccw_next = {}
    for c in block:
        rot = d.rotation(c)
        for i, h in enumerate(rot):
            ccw_next[h] = rot[(i + 1) % 4]
    start = next(h for c in block for h in d.rotation(c) if _edge_of(d, h) not in internal)
    out = [start]
    h = start
    while True:
        h = ccw_next[h]
        while _edge_of(d, h) in internal:
            h = ccw_next[_other_end(d, h)]
        if h == start:
            return out
        out.append(h)


def _patterns(d: PlaneDiagram, block: tuple[int, ...], rot: list[HalfEdge]):
    """(R bottom-to-top, L bottom-to-top, core slots, crossing order) candidates."""
    size = len(rot)
    h = size // 2
    owner = {x: d.crossing[x[0]] for x in rot}
    out = []
    for r in range(size):
        R = [rot[(r + i) % size] for i in range(h)]
        L = [rot[(r + size - 1 - i) % size] for i in range(h)]
        if len(block) == 1:
            out.append((R, L, [0], [block[0]]))
        elif len(block) == 2:
            if owner[L[0]] == owner[L[1]] and owner[R[0]] == owner[R[1]] != owner[L[0]]:
                out.append((R, L, [0, 0], [owner[L[0]], owner[R[0]]]))
        else:
            if owner[L[0]] == owner[L[1]] and owner[L[2]] == owner[R[2]] and owner[R[0]] == owner[R[1]]:
                order = [owner[L[0]], owner[L[2]], owner[R[0]]]
                if len(set(order)) == 3:
                    out.append((R, L, [0, 1, 0], order))
            if owner[L[1]] == owner[L[2]] and owner[L[0]] == owner[R[0]] and owner[R[1]] == owner[R[2]]:
                order = [owner[L[1]], owner[L[0]], owner[R[1]]]
                if len(set(order)) == 3:
                    out.append((R, L, [1, 0, 1], order))
    return out


def _emit_block(I, O, k, pattern, signs):
    """Events for one block, or None if the pattern cannot be attached.

    ``I`` lists the incoming half-edges bottom to top, ``O`` the outgoing
    ones bottom to top, ``k`` the slot of the lowest incoming strand.
    """
    R, L, core, order = pattern
    h = len(R)
    in_L = [i for i, x in enumerate(I) if x in L]
    options = []
    if in_L:
        lo, hi = in_L[0], in_L[-1] + 1
        if in_L != list(range(lo, hi)):
            return None
        options.append((I[:lo], I[lo:hi], I[hi:]))
    else:
        for j in range(len(I) + 1):
            options.append((I[:j], [], I[j:]))
    for bp, lins, tp in options:
        b, t, li = len(bp), len(tp), len(lins)
        if bp != list(reversed(R[:b])) or tp != list(reversed(R[h - t:])) or b + t > h:
            continue
        if lins:
            a = L.index(lins[0])
            if L[a:a + li] != lins:
                continue
            splits = [(a, h - a - li)]
        else:
            splits = [(h, 0), (0, h)]
        for ub, ut in splits:
            if (ub and ut) or (ub and b) or (ut and t):
                continue
            ev: list[tuple[str, int]] = []
            for i in range(ub):
                ev.append(("Cup", k + b + i))
            for i in range(ut):
                ev.append(("Cup", k + b + li + i))
            cs = k + b + ub
            first = len(ev)
            for off, c in zip(core, order):
                ev.append((SIGN_TOKEN[signs[c]], cs + off))
            for i in range(b):
                ev.append(("Cap", k + b - 1 - i))
            for i in range(t):
                ev.append(("Cap", cs + h - 1 - 2 * b - i))
            expect = list(reversed(L[:ub])) + R[b:h - t] + list(reversed(L[h - ut:]))
            if expect == list(O):
                return ev, first, cs
    return None


class _Graph:
    def __init__(self):
        self.rot: dict = {}
        self.ends: dict = {}

    def edge(self, eid, u, v):
        self.ends[eid] = (u, v)

    def other(self, eid, v):
        u, w = self.ends[eid]
        return w if u == v else u


def _st_numbering(g: _Graph, s, t, st_edge) -> dict:
    """Tarjan's st-ordering of a biconnected graph."""
    adj = {v: [e for e in g.rot[v]] for v in g.rot}
    pre: dict = {s: 0}
    parent: dict = {s: None}
    low: dict = {}
    order = [s]
    # iterative DFS, first edge s-t
    first = [st_edge] + [e for e in adj[s] if e != st_edge]
    stack = [(s, iter(first), None)]
    while stack:
        v, it, pe = stack[-1]
        advanced = False
        for e in it:
            if e == pe:
                continue
            w = g.other(e, v)
            if w not in pre:
                pre[w] = len(pre)
                parent[w] = v
                order.append(w)
                low[w] = w
                stack.append((w, iter(adj[w]), e))
                advanced = True
                break
            if pre[w] < pre[low.get(v, v)]:
                low[v] = w
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if pre[low.get(v, v)] < pre[low.get(u, u)]:
                    low[u] = low[v]
    if len(pre) != len(g.rot):
        raise LayoutError("graph is not connected")
    nxt = {s: t, t: None}
    prv = {s: None, t: s}
    sign = {s: -1}
    for v in order:
        if v in (s, t):
            continue
        p = parent[v]
        if sign[low[v]] == -1:
            # insert before p
            q = prv[p]
            prv[v], nxt[v] = q, p
            prv[p] = v
            if q is not None:
                nxt[q] = v
            sign[p] = 1
        else:
            q = nxt[p]
            prv[v], nxt[v] = p, q
            nxt[p] = v
            if q is not None:
                prv[q] = v
            sign[p] = -1
        sign.setdefault(v, -1)
    head = s
    while prv[head] is not None:
        head = prv[head]
    number = {}
    v = head
    while v is not None:
        number[v] = len(number)
        v = nxt[v]
    return number


def layout(d: PlaneDiagram, block: tuple[int, ...] = (), internal: tuple[int, ...] = ()) -> Layout:
    """A Morse word whose plane diagram is ``d``.

    ``block`` names crossings to be emitted consecutively (a bigon or a
    triangle), ``internal`` the edges joining them.
    """
    if d.n == 0:
        if d.outer[1] != RIGHT:
            raise LayoutError("a clockwise circle has no word")
        return Layout(DiagramWord((("Cup", 1), ("Cap", 1))), -1, 0)
    internal_set = set(internal)
    groups = [tuple(sorted(block))] if block else []
    grouped = set(block)
    groups += [(c,) for c in range(d.n) if c not in grouped]
    vertex_of = {c: ("c", gi) for gi, grp in enumerate(groups) for c in grp}
    g = _Graph()
    half_rot = {}
    for gi, grp in enumerate(groups):
        hr = _block_rotation(d, grp, internal_set) if len(grp) > 1 else d.rotation(grp[0])
        half_rot[("c", gi)] = hr
        g.rot[("c", gi)] = [_segment(d, x) for x in hr]
    inner_faces = {
        fi for fi, face in enumerate(d.faces) if all(e in internal_set for e, _ in face)
    }
    for e in range(d.size):
        if e in internal_set:
            continue
        a, b = ("a", e), ("b", e)
        fl, fr = ("f", d.face_of[(e, LEFT)]), ("f", d.face_of[(e, RIGHT)])
        g.rot[a] = [("s", e, 1), ("v", fl, a), ("s", e, 0), ("v", fr, a)]
        g.rot[b] = [("s", e, 2), ("v", fl, b), ("s", e, 1), ("v", fr, b)]
        g.edge(("s", e, 0), vertex_of[d.crossing[e]], a)
        g.edge(("s", e, 1), a, b)
        g.edge(("s", e, 2), b, vertex_of[d.crossing[(e + 1) % d.size]])
    for fi, face in enumerate(d.faces):
        if fi in inner_faces:
            continue
        f = ("f", fi)
        rot = []
        for e, side in face:
            if e in internal_set:
                continue
            pts = [("a", e), ("b", e)] if side == LEFT else [("b", e), ("a", e)]
            for x in pts:
                rot.append(("v", f, x))
                g.edge(("v", f, x), f, x)
        g.rot[f] = rot
    segment_half = {}
    for v, hr in half_rot.items():
        for x in hr:
            segment_half[_segment(d, x)] = x
    outer = ("f", d.outer_face)
    starts = [e for e, side in d.faces[d.outer_face] if side == RIGHT and e not in internal_set]
    for e in sorted(starts):
        for sv in (("a", e), ("b", e)):
            try:
                lay = _sweep(d, g, sv, outer, groups, half_rot, segment_half, block)
            except LayoutError:
                continue
            from .plane import plane_diagram

            if plane_diagram(lay.word).key == d.key:
                return lay
    raise LayoutError("no layout found")


def _segment(d: PlaneDiagram, x: HalfEdge):
    p, kind = x
    return ("s", p, 0) if kind == OUT else ("s", (p - 1) % d.size, 2)


def _sweep(d, g, s, t, groups, half_rot, segment_half, block) -> Layout:
    st_edge = ("v", t, s)
    number = _st_numbering(g, s, t, st_edge)
    column: list = []
    events: list[Event] = []
    block_at = (-1, 0)
    for v in sorted(number, key=number.get):
        rot = g.rot[v]
        is_in = [number[g.other(e, v)] < number[v] for e in rot]
        if v == s:
            i0 = rot.index(st_edge)
            out_arc = rot[i0:] + rot[:i0]
            in_arc: list = []
            lo = hi = 0
        else:
            m = len(rot)
            n_in = sum(is_in)
            pos = sorted(column.index(e) for e in rot if is_in[rot.index(e)])
            lo, hi = pos[0], pos[-1] + 1
            if hi - lo != n_in:
                raise LayoutError("incoming edges are not consecutive")
            want = list(reversed(column[lo:hi]))
            for i0 in range(m):
                arc = rot[i0:] + rot[:i0]
                if arc[:n_in] == want:
                    break
            else:
                raise LayoutError("sweep column out of order")
            in_arc, out_arc = arc[:n_in], arc[n_in:]
        k = 1 + sum(1 for e in column[:lo] if e[0] == "s")
        real_in = [e for e in column[lo:hi] if e[0] == "s"]
        real_out = [e for e in out_arc if e[0] == "s"]
        if v[0] in ("a", "b"):
            if not real_in and len(real_out) == 2:
                events.append(("Cup", k))
            elif len(real_in) == 2 and not real_out:
                events.append(("Cap", k))
        elif v[0] == "c":
            grp = groups[v[1]]
            I = [segment_half[e] for e in real_in]
            O = [segment_half[e] for e in real_out]
            best = None
            for pat in _patterns(d, grp, half_rot[v]):
                res = _emit_block(I, O, k, pat, d.signs)
                if res is not None and (best is None or len(res[0]) < len(best[0])):
                    best = res
            if best is None:
                raise LayoutError(f"cannot attach crossing block {grp}")
            ev, first, cs = best
            if block and tuple(sorted(grp)) == tuple(sorted(block)):
                block_at = (len(events) + first, cs)
            events.extend(ev)
        column[lo:hi] = out_arc
    return Layout(DiagramWord(tuple(events)), *block_at)

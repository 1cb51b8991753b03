"""Oriented plane diagrams up to planar isotopy.

A plane diagram is a signed Gauss code together with one marked edge side
on the unbounded face.  Passages are numbered 0..m-1 along the knot
(m = 2n); edge ``e`` runs from passage ``e`` to passage ``e + 1`` (mod m).
An edge side is ``(e, LEFT)`` or ``(e, RIGHT)`` relative to the direction
of travel.  Two diagram words have equal :meth:`PlaneDiagram.key` exactly
when they are related by planar isotopy of the plane (cups, caps, slides
and commutations), so the Reidemeister search works on these objects and
treats everything planar as free.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .model import CROSS_SIGN, DiagramWord

LEFT, RIGHT = 0, 1
IN, OUT = 0, 1

EdgeSide = tuple[int, int]


@dataclass(frozen=True)
class PlaneMove:
    """A Reidemeister move on a plane diagram.

    ``site`` holds the two crossing ids of the bigon for R2 moves (for
    R2Intro, ids in the resulting diagram) and the three triangle edges
    for R3.
    """

    kind: str  # "R2Elim", "R2Intro" or "R3"
    site: tuple[int, ...]


@dataclass(frozen=True)
class PlaneDiagram:
    crossing: tuple[int, ...]  # crossing id at each passage
    over: tuple[bool, ...]  # whether each passage is the overpass
    signs: tuple[int, ...]  # sign of each crossing id
    outer: EdgeSide

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def size(self) -> int:
        return len(self.crossing)

    @cached_property
    def passages_of(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for p, c in enumerate(self.crossing):
            out[c].append(p)
        return out

    def rotation(self, c: int) -> list[tuple[int, int]]:
        """Half-edges ``(passage, IN/OUT)`` around crossing ``c``, counterclockwise."""
        p, q = self.passages_of[c]
        # does the q strand cross the p strand from its right to its left?
        rl = (self.signs[c] == 1) == self.over[p]
        if rl:
            return [(p, OUT), (q, OUT), (p, IN), (q, IN)]
        return [(p, OUT), (q, IN), (p, IN), (q, OUT)]

    @cached_property
    def faces(self) -> list[tuple[EdgeSide, ...]]:
        m = self.size
        if m == 0:
            return [((0, LEFT),), ((0, RIGHT),)]
        cw = {}
        for c in range(self.n):
            rot = self.rotation(c)
            for i, h in enumerate(rot):
                cw[h] = rot[i - 1]
        seen: set[EdgeSide] = set()
        faces = []
        for e in range(m):
            for side in (LEFT, RIGHT):
                cur = (e, side)
                if cur in seen:
                    continue
                face = []
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    edge, s = cur
                    arrive = ((edge + 1) % m, IN) if s == LEFT else (edge, OUT)
                    p, kind = cw[arrive]
                    cur = (p, LEFT) if kind == OUT else ((p - 1) % m, RIGHT)
                faces.append(tuple(face))
        return faces

    @cached_property
    def face_of(self) -> dict[EdgeSide, int]:
        return {es: i for i, f in enumerate(self.faces) for es in f}

    @property
    def outer_face(self) -> int:
        return self.face_of[self.outer]

    def is_planar(self) -> bool:
        return len(self.faces) == self.n + 2

    @cached_property
    def key(self) -> tuple:
        """Canonical serialization, invariant under moving the base point."""
        m = self.size
        if m == 0:
            return ((), (), ((0, self.outer[1]),))
        crossing, over = self.crossing, self.over
        best_code: list | None = None
        tied: list[tuple[int, dict[int, int]]] = []
        for r in range(m):
            label: dict[int, int] = {}
            code = []
            cmp = 0
            for j in range(m):
                p = j + r - m if j + r >= m else j + r
                c = crossing[p]
                lab = label.get(c)
                if lab is None:
                    lab = label[c] = len(label)
                item = (lab, over[p])
                if cmp == 0 and best_code is not None:
                    b = best_code[j]
                    if item > b:
                        break
                    if item < b:
                        cmp = -1
                code.append(item)
            else:
                if best_code is None or cmp < 0:
                    best_code, tied = code, [(r, label)]
                else:
                    tied.append((r, label))
        outer = self.faces[self.outer_face]
        best = None
        for r, label in tied:
            signs = [0] * self.n
            for c, lab in label.items():
                signs[lab] = self.signs[c]
            face = tuple(sorted(((e - r) % m, s) for e, s in outer))
            cand = (tuple(best_code), tuple(signs), face)
            if best is None or cand < best:
                best = cand
        return best

    def representable(self) -> bool:
        """Whether some Morse word has this plane diagram.

        A word's traversal starts along the bottom of its first cup, so the
        unbounded face must lie to the right of at least one edge.
        """
        return any(side == RIGHT for _, side in self.faces[self.outer_face])

    def writhe(self) -> int:
        return sum(self.signs)

    # -- Reidemeister moves -------------------------------------------------

    def _edge_ends(self, e: int) -> tuple[int, int]:
        return self.crossing[e], self.crossing[(e + 1) % self.size]

    def _marker_avoiding(self, face: int, edges: set[int]) -> EdgeSide:
        sides = self.faces[face]
        for es in sides:
            if es[0] not in edges:
                return es
        raise ValueError("face has no usable marker")

    def bigons(self) -> list[tuple[int, int, int]]:
        """``(face, x, y)`` for every inner bigon that an R2 move removes."""
        out = []
        for fi, face in enumerate(self.faces):
            if len(face) != 2 or fi == self.outer_face or self.size == 0:
                continue
            (e1, _), (e2, _) = face
            x, y = self._edge_ends(e1)
            if x == y or {x, y} != set(self._edge_ends(e2)):
                continue
            m = self.size
            if self.over[e1] != self.over[(e1 + 1) % m] or self.over[e2] != self.over[(e2 + 1) % m]:
                continue
            out.append((fi, min(x, y), max(x, y)))
        return out

    def bigon_edges(self, x: int, y: int) -> tuple[int, int]:
        face = next(fi for fi, a, b in self.bigons() if {a, b} == {x, y})
        return tuple(sorted(e for e, _ in self.faces[face]))  # type: ignore[return-value]

    def triangles(self) -> list[tuple[int, tuple[int, int, int]]]:
        """``(face, edges)`` for every inner triangle admitting an R3 move."""
        out = []
        m = self.size
        for fi, face in enumerate(self.faces):
            if len(face) != 3 or fi == self.outer_face:
                continue
            edges = tuple(sorted(e for e, _ in face))
            if len(set(edges)) != 3:
                continue
            pairs = [frozenset(self._edge_ends(e)) for e in edges]
            if any(len(p) != 2 for p in pairs) or len(set(pairs)) != 3:
                continue
            pattern = sorted((self.over[e], self.over[(e + 1) % m]) for e in edges)
            if pattern[0] != (False, False) or pattern[2] != (True, True):
                continue
            out.append((fi, edges))
        return out

    def delete_crossings(self, ids: set[int], marker: EdgeSide) -> "PlaneDiagram":
        m = self.size
        keep = [p for p in range(m) if self.crossing[p] not in ids]
        relabel = {c: i for i, c in enumerate(c for c in range(self.n) if c not in ids)}
        new_index = {p: i for i, p in enumerate(keep)}
        e, side = marker
        if keep:
            p = e
            while p not in new_index:
                p = (p - 1) % m
            new_edge = new_index[p]
        else:
            new_edge = 0
        return PlaneDiagram(
            tuple(relabel[self.crossing[p]] for p in keep),
            tuple(self.over[p] for p in keep),
            tuple(s for c, s in enumerate(self.signs) if c not in ids),
            (new_edge, side),
        )

    def r2_elim(self, x: int, y: int) -> "PlaneDiagram":
        # the far sides of the bigon's edges change strand when it collapses
        marker = self._marker_avoiding(self.outer_face, set(self.bigon_edges(x, y)))
        return self.delete_crossings({x, y}, marker)

    def r3(self, edges: tuple[int, int, int]) -> "PlaneDiagram":
        m = self.size
        crossing = list(self.crossing)
        over = list(self.over)
        for e in edges:
            f = (e + 1) % m
            crossing[e], crossing[f] = crossing[f], crossing[e]
            over[e], over[f] = over[f], over[e]
        marker = self._marker_avoiding(self.outer_face, set(edges))
        return PlaneDiagram(tuple(crossing), tuple(over), self.signs, marker)

    def r2_intros(self) -> list["PlaneDiagram"]:
        """Every diagram from which one R2 move gives back ``self``.

        A finger pushed from edge side ``(e1, s1)`` across edge side
        ``(e2, s2)`` of the same face; the passage order along ``e2`` and
        the crossing signs follow from the two sides.
        """
        m = self.size
        P, Q = self.n, self.n + 1
        out = []
        for face in self.faces:
            k = len(face)
            for i in range(k):
                for j in range(i, k):
                    (e1, s1), (e2, s2) = face[i], face[j]
                    if e2 < e1:
                        (e1, s1), (e2, s2) = (e2, s2), (e1, s1)
                    for o in (True, False):
                        if i == j:
                            inserts = {e1: [(P, o), (Q, o), (Q, not o), (P, not o)]}
                            sign_choices = (1, -1)
                        else:
                            second = [(P, not o), (Q, not o)] if s1 != s2 else [(Q, not o), (P, not o)]
                            inserts = {e1: [(P, o), (Q, o)], e2: second}
                            sign_choices = ((1 if s2 == LEFT else -1) * (1 if o else -1),)
                        out.extend(self._finger(inserts, sign_choices))
        return out

    def _finger(self, inserts, sign_choices) -> list["PlaneDiagram"]:
        m = self.size
        P, Q = self.n, self.n + 1
        crossing, over, orig = [], [], []
        for p in range(max(m, 1)):
            if m:
                crossing.append(self.crossing[p])
                over.append(self.over[p])
                orig.append(p)
            for c, v in inserts.get(p, ()):
                crossing.append(c)
                over.append(v)
                orig.append(None)
        out = []
        for s in sign_choices:
            cand = PlaneDiagram(tuple(crossing), tuple(over), self.signs + (s, -s), (0, LEFT))
            if not cand.is_planar():
                continue
            bigon = next(
                (fi for fi, f in enumerate(cand.faces)
                 if len(f) == 2 and {cand._edge_ends(e) for e, _ in f} <= {(P, Q), (Q, P)}),
                None,
            )
            if bigon is None:
                continue
            site = {e for e, _ in cand.faces[bigon]}
            for fi in range(len(cand.faces)):
                if fi == bigon:
                    continue
                marker = cand._marker_avoiding(fi, site)
                if m == 0:
                    ok = marker[1] == self.outer[1]
                else:
                    p = marker[0]
                    while orig[p] is None:
                        p -= 1
                    ok = self.face_of[(orig[p], marker[1])] == self.outer_face
                if ok:
                    out.append(PlaneDiagram(cand.crossing, cand.over, cand.signs, marker))
        return out

    def successors(self) -> list[tuple[PlaneMove, "PlaneDiagram"]]:
        out: list[tuple[PlaneMove, PlaneDiagram]] = []
        for _, x, y in self.bigons():
            out.append((PlaneMove("R2Elim", (x, y)), self.r2_elim(x, y)))
        for _, edges in self.triangles():
            out.append((PlaneMove("R3", edges), self.r3(edges)))
        for d in self.r2_intros():
            out.append((PlaneMove("R2Intro", (d.n - 2, d.n - 1)), d))
        return [(mv, d) for mv, d in out if d.representable()]


def plane_diagram(d: DiagramWord) -> PlaneDiagram:
    """Plane diagram of a word; the base cup's lower strand borders the unbounded face."""
    over_a = d.a_over()
    ids: dict[int, int] = {}
    crossing, over = [], []
    for p in d.traversal.passages:
        if p.role not in ("A", "B"):
            continue
        if p.index not in ids:
            ids[p.index] = len(ids)
        crossing.append(ids[p.index])
        over.append(over_a[p.index] == (p.role == "A"))
    signs = [0] * len(ids)
    for i, c in ids.items():
        signs[c] = CROSS_SIGN[d.events[i][0]]
    m = len(crossing)
    return PlaneDiagram(tuple(crossing), tuple(over), tuple(signs), ((m - 1) % max(m, 1), RIGHT))

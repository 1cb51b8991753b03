"""Independent reference computations used by the test-suite.

Nothing here goes through the Gauss-diagram formulas; the Jones
polynomial comes from the Kauffman bracket state sum on the traversal.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product

from legknots.model import CROSS_SIGN, DiagramWord


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def jones(d: DiagramWord) -> dict[Fraction, int]:
    """Jones polynomial as {exponent of t: coefficient}."""
    # number the crossing passages; edge i runs from passage i to passage i+1
    passes = [(p.index, p.role) for p in d.traversal.passages if p.role in ("A", "B")]
    n = len(passes)
    if n == 0:
        return {Fraction(0): 1}
    pos = {pr: i for i, pr in enumerate(passes)}
    over = d.a_over()
    crossings = []
    for c in sorted(over):
        ia, ib = pos[(c, "A")], pos[(c, "B")]
        io, iu = (ia, ib) if over[c] else (ib, ia)
        # (in_over, out_over, in_under, out_under) as edge ids
        crossings.append(((io - 1) % n, io, (iu - 1) % n, iu, CROSS_SIGN[d.events[c][0]]))
    bracket: dict[int, int] = defaultdict(int)
    for state in product((0, 1), repeat=len(crossings)):
        parent = list(range(n))
        a_count = 0
        for (i_o, o_o, i_u, o_u, sign), s in zip(crossings, state):
            oriented = (s == 0) if sign > 0 else (s == 1)
            if s == 0:
                a_count += 1
            if oriented:
                pairs = ((i_o, o_u), (i_u, o_o))
            else:
                pairs = ((i_o, i_u), (o_o, o_u))
            for x, y in pairs:
                rx, ry = _find(parent, x), _find(parent, y)
                parent[rx] = ry
        loops = len({_find(parent, x) for x in range(n)})
        # A^{a-b} (-A^2 - A^-2)^{loops-1}
        poly = {a_count - (len(crossings) - a_count): 1}
        for _ in range(loops - 1):
            nxt: dict[int, int] = defaultdict(int)
            for e, c in poly.items():
                nxt[e + 2] -= c
                nxt[e - 2] -= c
            poly = nxt
        for e, c in poly.items():
            bracket[e] += c
    w = sum(c[4] for c in crossings)
    # (-A^3)^{-w} <D>, then t = A^{-4}
    out: dict[Fraction, int] = {}
    for e, c in bracket.items():
        if c:
            out[Fraction(-(e - 3 * w), 4)] = c * (-1) ** abs(w)
    return out


def _derivative_at_one(poly, order):
    total = Fraction(0)
    for e, c in poly.items():
        term = Fraction(1)
        for k in range(order):
            term *= e - k
        total += c * term
    return total


def v2_oracle(d: DiagramWord) -> int:
    v = jones(d)
    return int(-_derivative_at_one(v, 2) / 6)


def v3_oracle(d: DiagramWord) -> int:
    v = jones(d)
    val = -_derivative_at_one(v, 3) / 36 - _derivative_at_one(v, 2) / 12
    assert val.denominator == 1
    return int(val)


def component_count(events) -> int:
    """Brute-force segment union-find, independent of the traversal walk."""
    from legknots.model import column_sizes, footprint

    sizes = column_sizes(events)
    parent = {}
    for c, n in enumerate(sizes):
        for s in range(1, n + 1):
            parent[(c, s)] = (c, s)

    def union(x, y):
        rx, ry = _find(parent, x), _find(parent, y)
        parent[rx] = ry

    for c, ev in enumerate(events):
        k, r, a = footprint(ev)
        for s in range(1, sizes[c] + 1):
            if s < k:
                union((c, s), (c + 1, s))
            elif s >= k + r:
                union((c, s), (c + 1, s - r + a))
        if r == 2 and a == 2:
            union((c, k), (c + 1, k + 1))
            union((c, k + 1), (c + 1, k))
        elif r == 2:
            union((c, k), (c, k + 1))
        else:
            union((c + 1, k), (c + 1, k + 1))
    return len({_find(parent, x) for x in parent})

import random

import pytest
from hypothesis import given, settings, strategies as st

from legknots.corpus import FIGURE_EIGHT, TREFOIL, UNKNOT, random_diagram
from legknots.layout import LayoutError, layout
from legknots.model import parse_diagram
from legknots.moves import PLANAR_KINDS, Move, applicable_moves, apply_move
from legknots.plane import RIGHT, plane_diagram


def test_unknot_plane_diagram():
    p = plane_diagram(parse_diagram(UNKNOT))
    assert p.n == 0 and p.is_planar()
    assert p.key == ((), (), ((0, RIGHT),))


def test_planar_and_face_count():
    for w in (TREFOIL, FIGURE_EIGHT):
        p = plane_diagram(parse_diagram(w))
        assert len(p.faces) == p.n + 2
        assert sum(len(f) for f in p.faces) == 2 * p.size


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_planar_moves_keep_key_and_r_moves_are_successors(seed):
    d = random_diagram(random.Random(seed), 7)
    p = plane_diagram(d)
    assert p.is_planar() and p.representable()
    succ = None
    for m in applicable_moves(d):
        q = plane_diagram(apply_move(d, m))
        if m.kind in PLANAR_KINDS:
            assert q.key == p.key, m
        else:
            if succ is None:
                succ = {s.key for _, s in p.successors()}
            assert q.key in succ, m


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_successors_are_planar_and_reversible(seed):
    p = plane_diagram(random_diagram(random.Random(seed), 3))
    for mv, q in p.successors():
        assert q.is_planar() and q.representable()
        back = {s.key for _, s in q.successors()}
        assert p.key in back, mv


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_layout_round_trip(seed):
    p = plane_diagram(random_diagram(random.Random(seed), 8))
    assert plane_diagram(layout(p).word).key == p.key


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_block_layouts_make_moves_local(seed):
    p = plane_diagram(random_diagram(random.Random(seed), 8))
    for fi, x, y in p.bigons():
        lay = layout(p, (x, y), tuple(e for e, _ in p.faces[fi]))
        w, i = lay.word, lay.block_index
        out = apply_move(w, Move("R2Elim", i, w.events[i][1]))
        assert plane_diagram(out).key == p.r2_elim(x, y).key
    for fi, edges in p.triangles():
        ids = tuple(sorted({c for e in edges for c in p._edge_ends(e)}))
        lay = layout(p, ids, edges)
        w, i = lay.word, lay.block_index
        out = apply_move(w, Move("R3", i, w.events[i][1]))
        assert plane_diagram(out).key == p.r3(edges).key


def test_successor_layouts():
    p = plane_diagram(parse_diagram(TREFOIL))
    for _, q in p.successors():
        assert plane_diagram(layout(q).word).key == q.key


def test_unrepresentable_unknot():
    p = plane_diagram(parse_diagram(UNKNOT))
    clockwise = type(p)((), (), (), (0, 0))
    assert not clockwise.representable()
    with pytest.raises(LayoutError):
        layout(clockwise)


def test_key_ignores_base_point():
    p = plane_diagram(parse_diagram(FIGURE_EIGHT))
    m = p.size
    for r in range(m):
        crossing = p.crossing[r:] + p.crossing[:r]
        over = p.over[r:] + p.over[:r]
        q = type(p)(crossing, over, p.signs, ((p.outer[0] - r) % m, p.outer[1]))
        assert q.key == p.key

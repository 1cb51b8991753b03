import random

import pytest
from hypothesis import given, settings, strategies as st

from legknots.convert import front_to_diagram
from legknots.corpus import TREFOIL, TREFOIL_FRONT, UNKNOT, UNKNOT_FRONT, random_diagram, random_front
from legknots.invariants import rot_front, tb_front, v2, v3, whitney_rotation, writhe
from legknots.model import DiagramWord, FrontWord, parse_diagram, parse_front, parse_singular
from legknots.moves import (KINK_TYPES, REGULAR_KINDS, Move, MoveError, MoveTrace, applicable_moves, apply_move,
                            insert_cusp_pair, insert_kink, parse_trace, pull_kink_through_double_point,
                            stabilize)
from legknots.vassiliev import alternating_sum


def _inv(d):
    return writhe(d), whitney_rotation(d), v2(d), v3(d)


def test_unknot_moves():
    kinds = {m.kind for m in applicable_moves(parse_diagram(UNKNOT))}
    assert "R2Elim" not in kinds and "R3" not in kinds


def test_r2elim_offered_and_applied():
    d = parse_diagram("Cup1 Xp1 Xn1 Cap1")
    m = Move("R2Elim", 1, 1)
    assert m in applicable_moves(d)
    assert apply_move(d, m).serialize() == "Cup1 Cap1"


def test_r3_keeps_crossing_count():
    d = parse_diagram("Cup1 Cup3 Xp2 Xp3 Xn2 Cap3 Cap1")
    r3 = [m for m in applicable_moves(d) if m.kind == "R3"]
    assert r3
    for m in r3:
        assert apply_move(d, m).crossing_count == d.crossing_count


def test_inapplicable_move_rejected():
    with pytest.raises(MoveError):
        apply_move(parse_diagram(UNKNOT), Move("R2Elim", 0, 1))


def test_moves_sorted_deterministically():
    d = parse_diagram(TREFOIL)
    ms = applicable_moves(d)
    assert ms == sorted(ms, key=Move.sort_key)
    assert ms == applicable_moves(parse_diagram(TREFOIL))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_diagram_moves_keep_invariants(seed):
    d = random_diagram(random.Random(seed), 8)
    base = _inv(d)
    for m in applicable_moves(d):
        assert m.kind in REGULAR_KINDS
        out = apply_move(d, m)
        assert isinstance(out, DiagramWord)
        assert _inv(out) == base, m


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_front_moves_keep_invariants(seed):
    f = random_front(random.Random(seed), 7)
    base = tb_front(f), rot_front(f)
    for m in applicable_moves(f):
        out = apply_move(f, m)
        assert isinstance(out, FrontWord)
        assert (tb_front(out), rot_front(out)) == base, m


@pytest.mark.parametrize("kink", KINK_TYPES)
def test_kink_increments(kink):
    rng = random.Random(hash(kink) & 0xFFFF)
    for _ in range(20):
        d = random_diagram(rng, 8)
        sizes = d.columns()
        c = rng.randrange(1, len(sizes) - 1) if len(sizes) > 2 else 1
        s = rng.randint(1, sizes[c])
        k = insert_kink(d, kink, c, s)
        assert (whitney_rotation(k) - whitney_rotation(d), writhe(k) - writhe(d)) == kink


def test_kink_examples():
    u = parse_diagram(UNKNOT)
    k = insert_kink(u, (1, 1), 1, 1)
    assert (whitney_rotation(k), writhe(k)) == (2, 1)
    k = insert_kink(u, (-1, -1), 1, 1)
    assert (whitney_rotation(k), writhe(k)) == (0, -1)
    assert whitney_rotation(insert_kink(u, (-1, 1), 1, 1)) == 0


def test_bad_kink_location():
    with pytest.raises(MoveError):
        insert_kink(parse_diagram(UNKNOT), (1, 1), 1, 3)


def test_stabilize_examples():
    d = parse_diagram(TREFOIL)
    assert stabilize(d, (0, 0)) == d
    for n in range(4):
        s = stabilize(d, (n, n))
        assert whitney_rotation(s) == whitney_rotation(d)
        assert writhe(s) == writhe(d) + 2 * n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(-3, 3), st.integers(-3, 3))
def test_stabilize_increments(seed, i, j):
    d = random_diagram(random.Random(seed), 6)
    s = stabilize(d, (i, j))
    assert whitney_rotation(s) - whitney_rotation(d) == i - j
    assert writhe(s) - writhe(d) == (abs(i) if i > 0 else -abs(i)) + (abs(j) if j > 0 else -abs(j))
    assert v2(s) == v2(d)


@pytest.mark.parametrize("cusp_type, dm", [(1, -1), (2, 1)])
def test_cusp_pair_on_unknot(cusp_type, dm):
    f = parse_front(UNKNOT_FRONT)
    g = insert_cusp_pair(f, cusp_type, 1, 1)
    assert len(g) == len(f) + 2
    assert (rot_front(g), tb_front(g)) == (dm, -2)


def test_cusp_pairs_accumulate():
    f = parse_front(TREFOIL_FRONT)
    g = f
    for t in (1, 1, 2):
        g = insert_cusp_pair(g, t, 1, 1)
    assert rot_front(g) - rot_front(f) == 1 - 2
    assert tb_front(g) - tb_front(f) == -3


def test_bad_cusp_type():
    with pytest.raises(ValueError):
        insert_cusp_pair(parse_front(UNKNOT_FRONT), 3, 1, 1)


def test_pull_kink_through_double_point():
    sd = parse_singular("Cup1 Cup2 Xp1 Cap2 Xd1 Cap1")
    moved = pull_kink_through_double_point(sd, 4)
    assert moved.double_point_count == 1
    assert moved.serialize() != sd.serialize()
    for f in (writhe, whitney_rotation, v2):
        assert alternating_sum(f, moved) == alternating_sum(f, sd)
    back = pull_kink_through_double_point(moved, moved.double_points()[0])
    assert back.double_point_count == 1


def test_pull_without_kink():
    with pytest.raises(MoveError):
        pull_kink_through_double_point(parse_singular("Cup1 Xd1 Cap1"), 1)


def test_trace_round_trip():
    d = parse_diagram("Cup1 Xp1 Xn1 Cap1")
    moves = (Move("R2Elim", 1, 1),)
    t = MoveTrace(d, moves, parse_diagram(UNKNOT))
    assert t.verify()
    assert parse_trace(t.serialize()) == list(moves)


def test_front_to_diagram_of_cusp_pair_drops_writhe():
    f = parse_front(TREFOIL_FRONT)
    g = insert_cusp_pair(f, 1, 1, 1)
    assert writhe(front_to_diagram(g)) == writhe(front_to_diagram(f)) - 1

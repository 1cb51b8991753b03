"""Acceptance suite: eleven criteria, one PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
come; they are also repeated in the terminal summary.
"""
import itertools
import random
import time

from golden_cases import CASES, GOLDEN, run_case

from legknots.convert import front_to_diagram
from legknots.corpus import TREFOIL, TREFOIL_FRONT, UNKNOT, UNKNOT_FRONT, all_singular_words, random_diagram, \
    random_front, random_singular
from legknots.invariants import rot_front, tb_front, v2, v3, whitney_rotation, writhe
from legknots.model import parse_diagram, parse_front
from legknots.moves import (FRONT_MOVE_KINDS, KINK_TYPES, REGULAR_KINDS, applicable_moves, apply_move,
                            insert_cusp_pair, insert_kink, stabilize)
from legknots.search import Equivalent, SearchBudget, search_equivalent, verify_stab_commute
from legknots.vassiliev import StabChain, extend_chain, order_at_most, psi_extend

DIAGRAM_INVARIANTS = (writhe, whitney_rotation, v2, v3)


def _inv(d):
    return tuple(f(d) for f in DIAGRAM_INVARIANTS)


def _certified(r, a, b) -> bool:
    return isinstance(r, Equivalent) and r.trace.start == a and r.trace.end == b and r.trace.replay() == b


def test_criterion_01_move_invariance(report):
    t0 = time.perf_counter()
    rng = random.Random(101)
    diagrams = moves = bad = 0
    while diagrams < 500:
        d = random_diagram(rng, 12)
        diagrams += 1
        before = _inv(d)
        for m in applicable_moves(d):
            if m.kind not in REGULAR_KINDS:
                continue
            moves += 1
            bad += _inv(apply_move(d, m)) != before
    fronts = fmoves = 0
    while fronts < 200:
        f = random_front(rng, 10)
        fronts += 1
        before = (tb_front(f), rot_front(f))
        for m in applicable_moves(f):
            if m.kind not in FRONT_MOVE_KINDS:
                continue
            fmoves += 1
            g = apply_move(f, m)
            bad += (tb_front(g), rot_front(g)) != before
    dt = time.perf_counter() - t0
    report(1, "move invariance", bad == 0 and dt < 60,
           f"{diagrams} diagrams/{moves} moves, {fronts} fronts/{fmoves} moves, {bad} changes, {dt:.1f}s")


def test_criterion_02_kink_table(report):
    rng = random.Random(202)
    hosts = [random_diagram(rng, 8) for _ in range(20)]
    bad = checked = 0
    for kink in KINK_TYPES:
        for d in hosts:
            sizes = d.columns()
            c = rng.randrange(1, len(sizes) - 1)
            s = rng.randint(1, sizes[c])
            k = insert_kink(d, kink, c, s)
            checked += 1
            bad += (whitney_rotation(k) - whitney_rotation(d), writhe(k) - writhe(d)) != kink
    report(2, "kink table", bad == 0 and checked == 80, f"4 types x 20 hosts, {bad} mismatches")


def test_criterion_03_cusp_table(report):
    bad = 0
    for text in (UNKNOT_FRONT, TREFOIL_FRONT):
        f = parse_front(text)
        slot = f.events[0][1]
        for i, j in itertools.product(range(4), repeat=2):
            g = f
            for _ in range(i):
                g = insert_cusp_pair(g, 1, 1, slot)
            for _ in range(j):
                g = insert_cusp_pair(g, 2, 1, slot)
            bad += rot_front(g) - rot_front(f) != j - i
            bad += tb_front(g) - tb_front(f) != -(i + j)
    report(3, "cusp-pair table", bad == 0, f"i, j in 0..3 on unknot and trefoil, {bad} mismatches")


def test_criterion_04_front_diagram_correspondence(report):
    rng = random.Random(404)
    corpus = [parse_front(UNKNOT_FRONT), parse_front(TREFOIL_FRONT)]
    corpus += [random_front(rng, 10) for _ in range(60)]
    bad = 0
    for f in corpus:
        d = front_to_diagram(f)
        bad += (writhe(d), whitney_rotation(d)) != (tb_front(f), rot_front(f))
    report(4, "front/diagram correspondence", bad == 0 and len(corpus) >= 50,
           f"{len(corpus)} fronts, {bad} mismatches")


def test_criterion_05_cusp_pair_realizes_kink(report):
    budget = SearchBudget(10, 12, 60_000)
    cases = [(UNKNOT_FRONT, 1, 1), (TREFOIL_FRONT, 1, 1), (TREFOIL_FRONT, 3, 2)]
    results = []
    for text, column, slot in cases:
        f = parse_front(text)
        d = front_to_diagram(f)
        for cusp_type, kink in ((1, (-1, -1)), (2, (1, -1))):
            a = front_to_diagram(insert_cusp_pair(f, cusp_type, column, slot))
            b = insert_kink(d, kink, 1, 1)
            r = search_equivalent(a, b, budget)
            results.append((_certified(r, a, b) and r.depth <= 12, getattr(r, "depth", r.outcome)))
    ok = all(c for c, _ in results)
    report(5, "cusp pairs realize kinks", ok, f"{len(results)} searches, depths {[d for _, d in results]}")


def test_criterion_06_extension_identity(report):
    bad = checks = 0
    for base in (UNKNOT, TREFOIL):
        d = parse_diagram(base)
        for f, n in ((whitney_rotation, 0), (writhe, 1), (v2, 2)):
            direct = {q: f(stabilize(d, (q, q))) for q in range(-3 - n, 6)}
            for q in range(-3, 4):
                chain = StabChain(d, {q - i: direct[q - i] for i in range(n + 1)})
                checks += 1
                bad += psi_extend(chain, n, q) != direct[q + 1]
                # K^{q+1,q+1} from the extension, then K^{q+2,q+2} from that
                twice = extend_chain(chain, n, 2)
                checks += 1
                bad += twice[q + 2] != direct[q + 2] or twice[q + 2] != psi_extend(extend_chain(chain, n, 1), n, q + 1)
    report(6, "extension identity", bad == 0, f"{checks} checks, {bad} failures")


def test_criterion_07_order_vanishing(report):
    t0 = time.perf_counter()
    # every word with at most 6 crossings and at most 9 events
    ok0, w0, n0 = order_at_most(whitney_rotation, 0, all_singular_words(6, 1, 9))
    ok1, w1, n1 = order_at_most(writhe, 1, all_singular_words(6, 2, 9))
    rng = random.Random(707)
    corpus = {}
    while len(corpus) < 120:
        w = random_singular(rng, 3, 7)
        corpus[w.serialize()] = w
    ok2, w2, n2 = order_at_most(v2, 2, corpus.values())
    dt = time.perf_counter() - t0
    ok = ok0 and ok1 and ok2 and dt < 300
    witnesses = [str(w) for w in (w0, w1, w2) if w is not None]
    report(7, "order vanishing", ok,
           f"rotation {n0}, writhe {n1}, v2 {n2} words, {dt:.0f}s" + (f", witnesses {witnesses}" if witnesses else ""))


def test_criterion_08_kink_pair_cancellation(report):
    budget = SearchBudget(8, 8, 200_000)
    depths = []
    ok = True
    for base in (UNKNOT, TREFOIL):
        d = parse_diagram(base)
        # (1,1) then (-1,-1) on the outgoing strand, (1,-1) then (-1,1) on the returning one
        for first, second in (((1, 0), (-1, 0)), ((0, -1), (0, 1))):
            a = stabilize(stabilize(d, first), second)
            r = search_equivalent(a, d, budget)
            good = _certified(r, a, d) and r.depth <= 8
            ok &= good
            depths.append(r.depth if good else r.outcome)
    report(8, "kink-pair cancellation", ok, f"depths {depths}")


def test_criterion_09_stabilization_algebra(report):
    t0 = time.perf_counter()
    u = parse_diagram(UNKNOT)
    budget = SearchBudget(8, 8, 200_000)
    failed = []
    depths = set()
    for i, j, k, l in itertools.product((-1, 0, 1), repeat=4):
        r = verify_stab_commute(u, (i, j), (k, l), budget)
        if isinstance(r, Equivalent):
            depths.add(r.depth)
        else:
            failed.append(((i, j), (k, l), r.outcome))
    rng = random.Random(909)
    hosts = [random_diagram(rng, 8) for _ in range(20)]
    bad = 0
    rng3 = range(-3, 4)
    for d in hosts:
        base = (whitney_rotation(d), writhe(d))

        def delta(s):
            w = stabilize(d, s)
            return whitney_rotation(w) - base[0], writhe(w) - base[1]

        for s in itertools.product(rng3, repeat=2):
            ds = delta(s)
            t = (rng.choice(rng3), rng.choice(rng3))
            dt_ = delta(t)
            both = stabilize(stabilize(d, s), t)
            bad += (whitney_rotation(both) - base[0], writhe(both) - base[1]) != (ds[0] + dt_[0], ds[1] + dt_[1])
    dt = time.perf_counter() - t0
    report(9, "stabilization algebra", not failed and bad == 0,
           f"81 commute searches, {len(failed)} not certified, depths {sorted(depths)}; "
           f"additivity on 20 hosts, {bad} mismatches; {dt:.0f}s")


# Pairs of distinct fronts related by one Legendrian front move.
FRONT_PAIRS = [
    ("L1 L1 X2 X2 X2 R1 R1", "L1 L2 X1 X2 X2 X2 X2 R1 R1"),
    ("L1 L1 X2 X2 X2 R1 R1", "L1 L1 X2 X2 X2 X2 X1 R2 R1"),
    ("L1 L1 X2 R1 R1", "L1 L1 X2 X2 X1 R2 R1"),
    ("L1 L1 X2 R1 R1", "L1 L1 X2 L2 X3 R2 R1 R1"),
    ("L1 L2 R1 R1", "L1 L1 X2 X1 R1 R1"),
    ("L1 L2 R1 R1", "L1 L3 X2 X3 R1 R1"),
    ("L1 L2 R1 R1", "L1 L2 R1 L2 X1 R2 R1"),
]


def test_criterion_10_equivalent_fronts_agree(report):
    budget = SearchBudget(10, 10, 30_000)
    certified = agree = 0
    for s, t in FRONT_PAIRS:
        f, g = parse_front(s), parse_front(t)
        assert f != g
        a, b = front_to_diagram(f), front_to_diagram(g)
        if not _certified(search_equivalent(a, b, budget), a, b):
            continue
        certified += 1
        agree += _inv(a) == _inv(b) and (tb_front(f), rot_front(f)) == (tb_front(g), rot_front(g))
    ok = certified == agree == len(FRONT_PAIRS) >= 5
    report(10, "certified pairs agree on all invariants", ok,
           f"{certified}/{len(FRONT_PAIRS)} certified, {agree} agree")


def test_criterion_11_cli_golden(report):
    mismatched = []
    for name, argv in CASES:
        code, text = run_case(argv)
        if code != 0 or text != (GOLDEN / name).read_text(encoding="utf-8"):
            mismatched.append(name)
    report(11, "CLI golden files", not mismatched, f"{len(CASES)} examples, mismatched {mismatched}")

"""Deterministic generators of words for test corpora."""
from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .model import DiagramWord, FrontWord, SingularDiagramWord, WordError, column_sizes, traverse

UNKNOT = "Cup1 Cap1"
TREFOIL = "Cup1 Cup1 Xp2 Xp2 Xp2 Cap1 Cap1"
MIRROR_TREFOIL = "Cup1 Cup1 Xn2 Xn2 Xn2 Cap1 Cap1"
FIGURE_EIGHT = "Cup1 Cup1 Cup1 Cap2 Xp2 Xp1 Xn2 Xn1 Cap2 Cap1"
UNKNOT_FRONT = "L1 R1"
TREFOIL_FRONT = "L1 L1 X2 X2 X2 R1 R1"


def _random_events(rng: random.Random, crossings: int, kinds: tuple[str, str, str], cross_tokens) -> list:
    cup, cap, _ = kinds
    events = [(cup, 1)]
    n = 2
    placed = 0
    while n > 0:
        options = []
        if placed < crossings and n >= 2:
            options += ["x"] * 6
        if n < 6:
            options += ["cup"]
        if n > 2 or placed >= crossings:
            options += ["cap"] * (3 if placed >= crossings else 1)
        choice = rng.choice(options)
        if choice == "x":
            events.append((rng.choice(cross_tokens), rng.randint(1, n - 1)))
            placed += 1
        elif choice == "cup":
            events.append((cup, rng.randint(1, n + 1)))
            n += 2
        else:
            events.append((cap, rng.randint(1, n - 1)))
            n -= 2
    return events


def random_diagram(rng: random.Random, max_crossings: int = 12, min_crossings: int = 0) -> DiagramWord:
    """Single-component diagram word with a crossing count in the given range."""
    while True:
        target = rng.randint(min_crossings, max_crossings)
        ev = _random_events(rng, target, ("Cup", "Cap", "X"), ("Xp", "Xn"))
        try:
            return DiagramWord(tuple(ev))
        except WordError:
            continue


def random_front(rng: random.Random, max_crossings: int = 10, min_crossings: int = 0) -> FrontWord:
    while True:
        target = rng.randint(min_crossings, max_crossings)
        ev = _random_events(rng, target, ("L", "R", "X"), ("X",))
        try:
            return FrontWord(tuple(ev))
        except WordError:
            continue


def random_singular(rng: random.Random, double_points: int, max_crossings: int = 6) -> SingularDiagramWord:
    """Random word with exactly ``double_points`` Xd tokens among its crossings."""
    while True:
        d = random_diagram(rng, max(max_crossings, double_points), double_points)
        idx = [i for i, (k, _) in enumerate(d.events) if k in ("Xp", "Xn")]
        if len(idx) < double_points:
            continue
        chosen = set(rng.sample(idx, double_points))
        ev = tuple(("Xd", s) if i in chosen else (k, s) for i, (k, s) in enumerate(d.events))
        return SingularDiagramWord(ev)


def _shapes(max_events: int) -> Iterator[tuple]:
    """All closing event sequences over {open, close, cross} up to a length."""

    def rec(prefix, n):
        if prefix and n == 0:
            yield tuple(prefix)
            return
        if len(prefix) >= max_events:
            return
        # remaining events must be able to close
        if n // 2 > max_events - len(prefix):
            return
        for k in range(1, n + 2):
            prefix.append(("o", k))
            yield from rec(prefix, n + 2)
            prefix.pop()
        for k in range(1, n):
            prefix.append(("c", k))
            yield from rec(prefix, n - 2)
            prefix.pop()
            prefix.append(("x", k))
            yield from rec(prefix, n)
            prefix.pop()

    yield from rec([], 0)


def all_singular_words(max_crossings: int, double_points: int, max_events: int | None = None) -> Iterator[SingularDiagramWord]:
    """Exhaustive enumeration of single-component words with exactly
    ``double_points`` Xd tokens and at most ``max_crossings`` crossings in
    total (double points included), up to ``max_events`` events.
    """
    if max_events is None:
        max_events = max_crossings + 4
    for shape in _shapes(max_events):
        xs = [i for i, (t, _) in enumerate(shape) if t == "x"]
        if len(xs) > max_crossings or len(xs) < double_points:
            continue
        opens = sum(1 for t, _ in shape if t == "o")
        if opens > 2 + len(xs):
            continue
        base = [("Cup", k) if t == "o" else ("Cap", k) if t == "c" else None for t, k in shape]
        try:
            if not traverse(tuple(("Cup", k) if t == "o" else ("Cap", k) if t == "c" else ("Xd", k) for t, k in shape)).components_ok:
                continue
        except WordError:
            continue
        for labels in product(("Xp", "Xn", "Xd"), repeat=len(xs)):
            if labels.count("Xd") != double_points:
                continue
            ev = list(base)
            for i, lab in zip(xs, labels):
                ev[i] = (lab, shape[i][1])
            yield SingularDiagramWord(tuple(ev))


def random_plat(rng: random.Random, bridges: int = 2, crossings: int = 8) -> DiagramWord:
    """Plat closure of a random braid; knotted far more often than
    :func:`random_diagram`."""
    while True:
        n = 2 * bridges
        ev = [("Cup", 2 * i + 1) for i in range(bridges)]
        ev += [(rng.choice(("Xp", "Xn")), rng.randint(1, n - 1)) for _ in range(crossings)]
        ev += [("Cap", 1)] * bridges
        try:
            return DiagramWord(tuple(ev))
        except WordError:
            continue

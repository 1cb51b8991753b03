"""Resolutions of singular words, order tests and the binomial extension."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .model import SIGN_TOKEN, DiagramWord, SingularDiagramWord
from .moves import stabilize


@dataclass(frozen=True)
class Resolution:
    choices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(int(c) for c in self.choices))
        if any(c not in (1, -1) for c in self.choices):
            raise ValueError("resolution choices must be +1 or -1")

    @property
    def sign(self) -> int:
        return -1 if sum(1 for c in self.choices if c == -1) % 2 else 1


@dataclass(frozen=True)
class InvariantFunction:
    name: str
    evaluator: Callable[[DiagramWord], int] = field(compare=False)

    def __call__(self, d: DiagramWord) -> int:
        return self.evaluator(d)


def all_resolutions(k: int) -> list[Resolution]:
    return [Resolution(c) for c in itertools.product((1, -1), repeat=k)]


def resolve(sd: SingularDiagramWord, r: Resolution) -> DiagramWord:
    """Replace the double points, in word order, by signed crossings."""
    points = sd.double_points()
    if len(points) != len(r.choices):
        raise ValueError(f"{len(points)} double points but {len(r.choices)} choices")
    ev = list(sd.events)
    for i, c in zip(points, r.choices):
        ev[i] = (SIGN_TOKEN[c], ev[i][1])
    return DiagramWord(tuple(ev))


def alternating_sum(f: Callable[[DiagramWord], int], sd: SingularDiagramWord) -> int:
    return sum(r.sign * f(resolve(sd, r)) for r in all_resolutions(sd.double_point_count))


def order_at_most(f: Callable[[DiagramWord], int], n: int,
                  corpus: Iterable[SingularDiagramWord]) -> tuple[bool, SingularDiagramWord | None, int]:
    """Whether ``f`` passes the order <= n test on ``corpus``.

    Returns ``(holds, witness, words checked)``; the witness is the first
    word with a nonzero alternating sum.
    """
    count = 0
    for sd in corpus:
        if sd.double_point_count != n + 1:
            raise ValueError(f"corpus word {sd} does not have {n + 1} double points")
        count += 1
        if alternating_sum(f, sd) != 0:
            return False, sd, count
    return True, None, count


@dataclass
class StabChain:
    """Invariant values on the symmetric stabilizations K^{q,q} of a base word."""

    base: DiagramWord | None
    values: dict[int, int]

    @classmethod
    def evaluate(cls, f: Callable[[DiagramWord], int], base: DiagramWord, qs: Iterable[int]) -> "StabChain":
        return cls(base, {q: f(stabilize(base, (q, q))) for q in qs})


def psi_extend(chain: StabChain | dict[int, int], n: int, q: int) -> int:
    """Value at q + 1 of an order <= n invariant from its values at q - n .. q."""
    values = chain.values if isinstance(chain, StabChain) else chain
    missing = [q + 1 - i for i in range(1, n + 2) if q + 1 - i not in values]
    if missing:
        raise KeyError(f"chain has no value at {missing}")
    return sum((-1) ** (i + 1) * comb(n + 1, i) * values[q + 1 - i] for i in range(1, n + 2))


def extend_chain(chain: StabChain | dict[int, int], n: int, steps: int) -> dict[int, int]:
    """Extend past the largest index ``steps`` times, feeding results back in."""
    values = dict(chain.values if isinstance(chain, StabChain) else chain)
    for _ in range(steps):
        q = max(values)
        values[q + 1] = psi_extend(values, n, q)
    return values


def psi_consistency_check(f: Callable[[DiagramWord], int], n: int, d: DiagramWord,
                          q_range: Iterable[int]) -> bool:
    for q in q_range:
        chain = StabChain.evaluate(f, d, range(q - n, q + 1))
        if psi_extend(chain, n, q) != f(stabilize(d, (q + 1, q + 1))):
            return False
    return True


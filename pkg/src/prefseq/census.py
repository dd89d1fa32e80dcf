"""Counting de Bruijn sequences and tabulating them by complexity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator

from .analysis import complexity
from .core import Alphabet, PreferenceFunction
from .generator import generate

ENUMERATION_LIMIT = 10**7


class EnumerationTooLarge(ValueError):
    pass


def count_de_bruijn(t: int, i: int) -> int:
    """Number of de Bruijn sequences of order ``i`` over ``t`` symbols."""
    Alphabet(t)
    if i < 1:
        raise ValueError(f"order must be >= 1, got {i}")
    e = t ** (i - 1)
    return factorial(t - 1) ** e * t ** (e - i)


def count_by_complexity(t: int, i: int, mode: str = "corrected") -> int:
    """Number of order-n sequences (any ``n > i``) of complexity exactly ``i``.

    ``mode="paper"`` evaluates the published closed forms literally, whose
    ``i = 1`` case omits subtracting the complexity-0 sequences;
    ``mode="corrected"`` uses ``M(t, i+1) - M(t, i)`` for every ``i >= 1``.
    """
    Alphabet(t)
    if i < 0:
        raise ValueError(f"complexity must be >= 0, got {i}")
    f = factorial(t - 1)
    if i == 0:
        return f
    if mode == "corrected":
        return count_de_bruijn(t, i + 1) - count_de_bruijn(t, i)
    if mode == "paper":
        if i == 1:
            return f**t * t ** (t - 2)
        return f ** (t**i) * t ** (t**i - i - 1) - f ** (t ** (i - 1)) * t ** (t ** (i - 1) - i)
    raise ValueError(f"unknown mode {mode!r}; use 'paper' or 'corrected'")


def _enumeration_cost(t: int, span: int) -> int:
    return t ** (t**span - 1) + count_de_bruijn(t, span + 1)


def least_digit_choices(t: int, span: int) -> Iterator[tuple]:
    """Every assignment of least-preferred digits whose shift map is a tree
    into the self-loop at the zero context."""
    size = t**span
    for tail in product(range(t), repeat=size - 1):
        last = (0,) + tail
        # 2 reaches zero, 1 on the walk being checked
        state = [0] * size
        state[0] = 2
        ok = True
        for start in range(1, size):
            walk = []
            c = start
            while state[c] == 0:
                state[c] = 1
                walk.append(c)
                c = (c * t + last[c]) % size
            if state[c] == 1:
                ok = False
                break
            for v in walk:
                state[v] = 2
        if ok:
            yield last


def enumerate_complete(t: int, span: int, limit: int = ENUMERATION_LIMIT) -> Iterator[PreferenceFunction]:
    """All complete preference functions of ``span`` over ``t`` symbols, each once."""
    Alphabet(t)
    cost = _enumeration_cost(t, span)
    if cost > limit:
        raise EnumerationTooLarge(f"enumerating t={t}, span={span} needs ~{cost} steps (limit {limit})")
    for last in least_digit_choices(t, span):
        heads = [list(permutations([d for d in range(t) if d != z])) for z in last]
        for choice in product(*heads):
            yield PreferenceFunction(t, span, tuple(h + (z,) for h, z in zip(choice, last)))


@dataclass(frozen=True)
class CensusTable:
    t: int
    order: int
    counts: dict
    total: int

    def line(self) -> str:
        parts = [f"span {s}: {self.counts.get(s, 0)}" for s in range(self.order)]
        return ", ".join(parts) + f", total {self.total}"


def empirical_census(t: int, n: int, limit: int = ENUMERATION_LIMIT) -> CensusTable:
    """Complexity histogram of all order-``n`` sequences started at ``0^n``."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    hist = Counter()
    for pref in enumerate_complete(t, n - 1, limit):
        hist[complexity(generate(pref, n)).span] += 1
    counts = {s: hist.get(s, 0) for s in range(n)}
    return CensusTable(t, n, counts, sum(counts.values()))

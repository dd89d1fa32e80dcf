"""Greedy generation from preference functions, classic constructors and
the brute-force de Bruijn check."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Optional, Sequence

from .core import (
    Alphabet,
    DigitSequence,
    PreferenceFunction,
    Word,
    check_word,
    index_to_word,
    word_to_index,
)

DEFAULT_MAX_WINDOWS = 2**31


class WindowTableTooLarge(ValueError):
    pass


def generate(
    pref: PreferenceFunction,
    n: int,
    initial: Optional[Sequence[int]] = None,
    *,
    wrap: bool = False,
    max_windows: int = DEFAULT_MAX_WINDOWS,
) -> DigitSequence:
    """Run the greedy procedure for order ``n`` starting from ``initial``.

    After the initial word, each new digit is the most preferred entry of
    the row for the last ``pref.span`` digits whose order-n window has not
    been seen yet. Generation stops when no entry of the row is new.
    ``initial`` defaults to ``0^n``.
    """
    t, k = pref.t, pref.span
    if n < k + 1:
        raise ValueError(f"order {n} is too small for a span-{k} preference function")
    if initial is None:
        initial = (0,) * n
    else:
        try:
            initial = check_word(initial, t, n)
        except ValueError as exc:
            raise ValueError(f"initial word does not match the preference function: {exc}") from None
    size = t**n
    if size > max_windows:
        raise WindowTableTooLarge(f"{t}^{n} windows exceeds the limit of {max_windows}")

    seen = bytearray((size + 7) >> 3)
    prefix_mod = t ** (n - 1)
    ctx_mod = t**k
    rows = pref.rows

    w = word_to_index(initial, t)
    seen[w >> 3] |= 1 << (w & 7)
    digits = list(initial)
    prefix = w % prefix_mod
    while True:
        base = prefix * t
        for d in rows[prefix % ctx_mod]:
            w = base + d
            if not (seen[w >> 3] >> (w & 7)) & 1:
                break
        else:
            break
        seen[w >> 3] |= 1 << (w & 7)
        digits.append(d)
        prefix = w % prefix_mod

    halt_length = len(digits) - n + 1
    if wrap:
        digits.extend(digits[: n - 1])
    return DigitSequence(t, n, tuple(digits), "generated", halt_length, wrap)


def prefer_higher(t: int) -> PreferenceFunction:
    """Span-0 function ``(t-1, ..., 1, 0)``; the Ford sequence generator."""
    Alphabet(t)
    return PreferenceFunction.constant(tuple(range(t - 1, -1, -1)))


def prefer_opposite_binary() -> PreferenceFunction:
    return PreferenceFunction(2, 1, ((1, 0), (0, 1)))


def max_overlap(x: Sequence[int], initial: Sequence[int]) -> int:
    """Largest ``r`` such that the last ``r`` digits of ``x`` equal the first ``r`` of ``initial``."""
    x = tuple(x)
    initial = tuple(initial)
    if len(initial) != len(x) + 1:
        raise ValueError("initial word must be one digit longer than the context")
    for r in range(len(x), 0, -1):
        if x[len(x) - r:] == initial[:r]:
            return r
    return 0


def _descending_fill(context: Word, remaining: list) -> list:
    return sorted(remaining, reverse=True)


def overlap_preference(
    initial: Sequence[int],
    t: int,
    fill: Optional[Callable[[Word, list], Sequence[int]]] = None,
) -> PreferenceFunction:
    """Span ``n-1`` function whose least preferred digit after context ``x``
    is ``initial[r]``, with ``r = max_overlap(x, initial)``.

    ``fill(context, remaining)`` orders the other ``t-1`` digits; by default
    they are tried in decreasing order.
    """
    initial = check_word(initial, t)
    n = len(initial)
    if n < 1:
        raise ValueError("initial word must be non-empty")
    fill = fill or _descending_fill
    rows = []
    for i in range(t ** (n - 1)):
        ctx = index_to_word(i, t, n - 1)
        last = initial[max_overlap(ctx, initial)]
        rest = [d for d in range(t) if d != last]
        head = tuple(fill(ctx, rest))
        if sorted(head) != rest:
            raise ValueError(f"fill rule returned {head} for remaining digits {rest}")
        rows.append(head + (last,))
    return PreferenceFunction(t, n - 1, tuple(rows))


def window_counts(seq: DigitSequence) -> Counter:
    return Counter(seq.unwrapped().windows())


def is_de_bruijn(seq: DigitSequence) -> bool:
    """Every order-n word occurs exactly once and nothing else is there."""
    seq = seq.unwrapped()
    t, n = seq.t, seq.order
    if len(seq.digits) != t**n + n - 1:
        return False
    counts = window_counts(seq)
    return len(counts) == t**n and all(c == 1 for c in counts.values())


def missing_windows(seq: DigitSequence) -> list:
    """Order-n words absent from ``seq``, in numeric order."""
    present = set(window_counts(seq))
    return [w for w in Alphabet(seq.t).words(seq.order) if w not in present]

"""Completeness of preference functions, recovering a preference function
from a sequence, preference-function complexity and Ford equivalence."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .core import (
    DigitSequence,
    LeastPreferenceMap,
    PreferenceFunction,
    format_word,
    index_to_word,
    least_preference,
    word_to_index,
)
from .generator import generate, is_de_bruijn, prefer_higher


@dataclass(frozen=True)
class CompletenessReport:
    """Truthy iff the least preferred digit after ``0^k`` is 0 and the
    least-preference map has no cycle other than that self-loop.

    ``cycles`` lists every offending cycle as context words. For span 0 the
    map is a single trivial self-loop, so ``zero_loop`` carries the whole
    verdict there.

    A complete function generates a full sequence from ``0^n`` for every
    order ``n >= span + 1``. An incomplete one fails for every
    ``n >= span + 2``; at ``n = span + 1`` alone, 0 is never accepted after
    ``0^span``, so a table whose only defect is where 0 sits in that row
    still gives a full sequence there.
    """

    complete: bool
    zero_loop: bool
    cycles: tuple
    least: LeastPreferenceMap

    def __bool__(self) -> bool:
        return self.complete


def is_complete(pref: PreferenceFunction) -> CompletenessReport:
    g = least_preference(pref)
    zero_loop = pref.rows[0][-1] == 0
    offending = tuple(c for c in g.cycles if not (zero_loop and c == (0,)))
    words = tuple(tuple(index_to_word(i, pref.t, pref.span) for i in c) for c in offending)
    return CompletenessReport(zero_loop and not offending, zero_loop, words, g)


def format_cycle(cycle: Sequence[Sequence[int]]) -> str:
    """``00 → 01 → 10 → 00`` style rendering, closed back on its start."""
    return " → ".join(format_word(w) for w in list(cycle) + [cycle[0]])


@dataclass(frozen=True)
class PrecedenceConstraints:
    """Per-context ordering requirements on preference rows.

    ``edges[c]`` is a frozenset of pairs ``(a, z)`` meaning digit ``a``
    must come before ``z`` in the row of the context with index ``c``.
    """

    t: int
    span: int
    edges: tuple

    def feasible(self) -> bool:
        return all(self.cycle(c) is None for c in range(len(self.edges)))

    def cycle(self, context: int) -> Optional[list]:
        """A precedence cycle ``[a, b, ..., a]`` in one context, if any."""
        adj = {d: [] for d in range(self.t)}
        for a, z in sorted(self.edges[context]):
            adj[a].append(z)
        color = dict.fromkeys(adj, 0)
        for root in adj:
            if color[root]:
                continue
            stack = [(root, iter(adj[root]))]
            path = [root]
            color[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[node] = 2
                    stack.pop()
                    path.pop()
                elif color[nxt] == 1:
                    return path[path.index(nxt):] + [nxt]
                elif color[nxt] == 0:
                    color[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(adj[nxt])))
        return None

    def smallest_order(self, context: int) -> Optional[tuple]:
        """Lexicographically smallest row satisfying the context's edges."""
        indeg = [0] * self.t
        out = [[] for _ in range(self.t)]
        for a, z in self.edges[context]:
            out[a].append(z)
            indeg[z] += 1
        ready = [d for d in range(self.t) if indeg[d] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            d = heapq.heappop(ready)
            order.append(d)
            for z in out[d]:
                indeg[z] -= 1
                if indeg[z] == 0:
                    heapq.heappush(ready, z)
        return tuple(order) if len(order) == self.t else None


def _require_zero_start_de_bruijn(seq: DigitSequence) -> DigitSequence:
    seq = seq.unwrapped()
    if not is_de_bruijn(seq):
        raise ValueError(f"not a de Bruijn sequence of order {seq.order} over {seq.t} symbols")
    if any(seq.digits[: seq.order]):
        raise ValueError(f"sequence must start with {seq.order} zeros")
    return seq


def build_constraints(seq: DigitSequence, span: int) -> PrecedenceConstraints:
    """Orderings a span-``span`` function needs to regenerate ``seq`` from ``0^n``.

    At each generated position the accepted digit must precede every other
    digit whose window is still unseen there. Digits whose windows were
    already used are left unconstrained.
    """
    seq = _require_zero_start_de_bruijn(seq)
    t, n, digits = seq.t, seq.order, seq.digits
    if not 0 <= span <= n - 1:
        raise ValueError(f"span must be between 0 and {n - 1}, got {span}")
    prefix_mod = t ** (n - 1)
    ctx_mod = t**span
    edges = [set() for _ in range(ctx_mod)]
    w = word_to_index(digits[:n], t)
    seen = {w}
    prefix = w % prefix_mod
    for a in digits[n:]:
        ctx = prefix % ctx_mod
        base = prefix * t
        for z in range(t):
            if z != a and base + z not in seen:
                edges[ctx].add((a, z))
        w = base + a
        seen.add(w)
        prefix = w % prefix_mod
    return PrecedenceConstraints(t, span, tuple(frozenset(e) for e in edges))


@dataclass(frozen=True)
class Infeasible:
    """No span-``span`` function regenerates the sequence; ``cycle`` is a
    precedence cycle of digits in the context ``context``."""

    span: int
    context: tuple
    cycle: tuple

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        chain = " < ".join(str(d) for d in self.cycle)
        return f"span {self.span} infeasible: context {format_word(self.context)} needs {chain}"


def induce_preference(seq: DigitSequence, span: int):
    """A span-``span`` preference function generating ``seq`` from ``0^n``,
    or :class:`Infeasible`.

    Rows are the lexicographically smallest orders meeting the constraints.
    """
    cons = build_constraints(seq, span)
    rows = []
    for c in range(len(cons.edges)):
        row = cons.smallest_order(c)
        if row is None:
            return Infeasible(span, index_to_word(c, cons.t, span), tuple(cons.cycle(c)))
        rows.append(row)
    pref = PreferenceFunction(cons.t, span, tuple(rows))
    seq = seq.unwrapped()
    regenerated = generate(pref, seq.order)
    if regenerated.digits != seq.digits:
        raise RuntimeError(
            f"induced span-{span} table does not regenerate the sequence "
            f"({regenerated.text} != {seq.text})"
        )
    return pref


@dataclass(frozen=True)
class ComplexityReport:
    """``feasible[k]`` tells whether some span-``k`` function regenerates
    ``sequence``; ``span`` is the least such ``k`` and ``witness`` one
    function achieving it."""

    sequence: DigitSequence
    order: int
    span: int
    witness: PreferenceFunction
    feasible: tuple


def complexity(seq: DigitSequence) -> ComplexityReport:
    """Smallest span of a preference function regenerating ``seq`` from ``0^n``.

    Spans ``0 .. n-1`` are searched; span ``n-1`` always succeeds for a
    de Bruijn sequence, so span ``n`` never needs checking.
    """
    seq = _require_zero_start_de_bruijn(seq)
    results = [induce_preference(seq, k) for k in range(seq.order)]
    feasible = tuple(bool(r) for r in results)
    span = feasible.index(True)
    # a span-s table lifts to every larger span by ignoring the extra digits
    if not all(feasible[span:]):
        raise RuntimeError(f"feasibility is not monotone in the span: {feasible}")
    return ComplexityReport(seq, seq.order, span, results[span], feasible)


def apply_permutation(seq: DigitSequence, sigma: Sequence[int]) -> DigitSequence:
    """Relabel every digit ``d`` as ``sigma[d]``."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(seq.t)):
        raise ValueError(f"{sigma} is not a permutation of 0..{seq.t - 1}")
    out = DigitSequence(
        seq.t, seq.order, tuple(sigma[d] for d in seq.digits), wrapped=seq.wrapped
    )
    if is_de_bruijn(seq) and not is_de_bruijn(out):
        raise RuntimeError("relabelling destroyed the de Bruijn property")
    return out


def equivalent_to_ford(seq: DigitSequence) -> Optional[tuple]:
    """A digit permutation fixing 0 that maps the Ford sequence onto ``seq``,
    or ``None``."""
    seq = _require_zero_start_de_bruijn(seq)
    ford = generate(prefer_higher(seq.t), seq.order)
    for rest in permutations(range(1, seq.t)):
        sigma = (0,) + rest
        if apply_permutation(ford, sigma).digits == seq.digits:
            return sigma
    return None

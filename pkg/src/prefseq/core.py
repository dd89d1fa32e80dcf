"""Alphabets, words, preference tables and least-preference maps.

Contexts of length ``k`` over an alphabet of size ``t`` are addressed by
their base-``t`` value (most significant digit first), so a preference
table is simply a tuple of ``t**k`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_ALPHABET = len(DIGIT_CHARS)

Word = tuple  # tuple[int, ...]; every digit below the alphabet size


@dataclass(frozen=True)
class Alphabet:
    """The digits ``0 .. t-1``."""

    t: int

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {self.t!r}")
        if self.t > MAX_ALPHABET:
            raise ValueError(f"alphabet size {self.t} exceeds {MAX_ALPHABET}")

    def __len__(self) -> int:
        return self.t

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.t))

    def __contains__(self, digit) -> bool:
        return isinstance(digit, int) and 0 <= digit < self.t

    def words(self, length: int) -> Iterator[Word]:
        """All words of ``length`` in base-t numeric order."""
        for i in range(self.t**length):
            yield index_to_word(i, self.t, length)


def check_word(word: Iterable[int], t: int, length: Optional[int] = None) -> Word:
    word = tuple(word)
    if length is not None and len(word) != length:
        raise ValueError(f"expected a word of length {length}, got {len(word)}")
    for d in word:
        if not isinstance(d, int) or not 0 <= d < t:
            raise ValueError(f"digit {d!r} is not in the alphabet 0..{t - 1}")
    return word


def word_to_index(word: Sequence[int], t: int) -> int:
    value = 0
    for d in word:
        value = value * t + d
    return value


def index_to_word(index: int, t: int, length: int) -> Word:
    digits = [0] * length
    for pos in range(length - 1, -1, -1):
        index, digits[pos] = divmod(index, t)
    return tuple(digits)


def format_word(word: Sequence[int]) -> str:
    """Render a word as digit characters; the empty word becomes ``-``."""
    if not word:
        return "-"
    return "".join(DIGIT_CHARS[d] for d in word)


def parse_word(text: str, t: int) -> Word:
    text = text.strip()
    if text == "-":
        return ()
    try:
        digits = tuple(DIGIT_CHARS.index(c) for c in text.lower())
    except ValueError:
        raise ValueError(f"invalid digit in word {text!r}") from None
    return check_word(digits, t)


def format_sequence(digits: Sequence[int], t: int) -> str:
    """Contiguous characters for ``t <= 10``, comma-separated decimals above."""
    if t <= 10:
        return "".join(DIGIT_CHARS[d] for d in digits)
    return ",".join(str(d) for d in digits)


def parse_sequence(text: str, t: int) -> Word:
    text = "".join(text.split())
    if t <= 10:
        try:
            digits = tuple(int(c) for c in text)
        except ValueError:
            raise ValueError(f"sequence contains a non-digit character: {text!r}") from None
    else:
        try:
            digits = tuple(int(tok) for tok in text.split(",") if tok)
        except ValueError:
            raise ValueError("sequence must be comma-separated decimals for t > 10") from None
    return check_word(digits, t)


@dataclass(frozen=True)
class PreferenceFunction:
    """A total map from length-``span`` contexts to permutations of the alphabet.

    ``rows[i]`` is the preference row of the context whose base-t value is
    ``i``; the first entry is tried first and the last entry is the least
    preferred digit.
    """

    t: int
    span: int
    rows: tuple

    def __post_init__(self):
        Alphabet(self.t)
        if not isinstance(self.span, int) or self.span < 0:
            raise ValueError(f"span must be a non-negative integer, got {self.span!r}")
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != self.t**self.span:
            raise ValueError(
                f"a span-{self.span} table over {self.t} symbols needs "
                f"{self.t ** self.span} rows, got {len(rows)}"
            )
        full = list(range(self.t))
        for i, row in enumerate(rows):
            if sorted(row) != full:
                ctx = format_word(index_to_word(i, self.t, self.span))
                raise ValueError(f"row for context {ctx} is not a permutation: {row}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def constant(cls, row: Sequence[int]) -> "PreferenceFunction":
        """Span-0 function with the single ``row``."""
        return cls(len(row), 0, (tuple(row),))

    @classmethod
    def from_mapping(cls, t: int, span: int, mapping: Mapping) -> "PreferenceFunction":
        """Build from ``{context word: row}``; every context must be present."""
        rows = [None] * t**span
        for ctx, row in mapping.items():
            rows[word_to_index(check_word(ctx, t, span), t)] = tuple(row)
        missing = [i for i, r in enumerate(rows) if r is None]
        if missing:
            ctx = format_word(index_to_word(missing[0], t, span))
            raise ValueError(f"no row for context {ctx}")
        return cls(t, span, tuple(rows))

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.t)

    def contexts(self) -> Iterator[Word]:
        return self.alphabet.words(self.span)

    def row(self, context) -> tuple:
        if isinstance(context, int):
            return self.rows[context]
        return self.rows[word_to_index(check_word(context, self.t, self.span), self.t)]

    def as_mapping(self) -> dict:
        return {ctx: row for ctx, row in zip(self.contexts(), self.rows)}

    def least(self, context) -> int:
        """The least preferred digit for ``context``."""
        return self.row(context)[-1]


def find_cycles(mapping) -> list:
    """Cycles of a functional graph.

    ``mapping`` is either a sequence ``f`` on ``range(len(f))`` or a dict
    whose values are keys. Each cycle is returned as a list rotated to
    start at its smallest node; cycles are ordered by that node.
    """
    if isinstance(mapping, Mapping):
        nodes = list(mapping)
        succ = mapping.__getitem__
    else:
        nodes = range(len(mapping))
        succ = mapping.__getitem__

    # 0 unvisited, 1 on the current walk, 2 finished
    color = {}
    cycles = []
    for start in nodes:
        if color.get(start, 0):
            continue
        path = []
        pos = {}
        node = start
        while color.get(node, 0) == 0:
            color[node] = 1
            pos[node] = len(path)
            path.append(node)
            node = succ(node)
        if color[node] == 1:
            cyc = path[pos[node]:]
            lo = cyc.index(min(cyc))
            cycles.append(cyc[lo:] + cyc[:lo])
        for v in path:
            color[v] = 2
    cycles.sort(key=lambda c: c[0])
    return cycles


@dataclass(frozen=True)
class LeastPreferenceMap:
    """Shift-and-append-least-digit map on contexts, with its cycles.

    ``images[i]`` and the entries of ``cycles`` are context indices.
    """

    t: int
    span: int
    images: tuple
    cycles: tuple = field(default=())

    def __call__(self, context: Sequence[int]) -> Word:
        i = word_to_index(check_word(context, self.t, self.span), self.t)
        return index_to_word(self.images[i], self.t, self.span)

    def cycle_words(self) -> list:
        return [[index_to_word(i, self.t, self.span) for i in cyc] for cyc in self.cycles]


def least_preference(pref: PreferenceFunction) -> LeastPreferenceMap:
    t, k = pref.t, pref.span
    size = t**k
    images = tuple((i * t + row[-1]) % size for i, row in enumerate(pref.rows))
    cycles = tuple(tuple(c) for c in find_cycles(images))
    return LeastPreferenceMap(t, k, images, cycles)


class TableFormatError(ValueError):
    """Malformed preference-table text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _parse_header(line: str, lineno: int) -> tuple:
    fields = {}
    for tok in line.split():
        key, sep, value = tok.partition("=")
        if not sep or key not in ("t", "span") or key in fields:
            raise TableFormatError(f"bad header token {tok!r}; expected 't=<int> span=<int>'", lineno)
        try:
            fields[key] = int(value)
        except ValueError:
            raise TableFormatError(f"header value {value!r} is not an integer", lineno) from None
    if set(fields) != {"t", "span"}:
        raise TableFormatError("header must give both t= and span=", lineno)
    t, span = fields["t"], fields["span"]
    if not 2 <= t <= MAX_ALPHABET:
        raise TableFormatError(f"t must be between 2 and {MAX_ALPHABET}, got {t}", lineno)
    if span < 0:
        raise TableFormatError(f"span must be non-negative, got {span}", lineno)
    return t, span


def parse_preference_table(text: str) -> PreferenceFunction:
    """Parse the ``t=<int> span=<int>`` / ``CONTEXT: d1 ... dt`` format."""
    header = None
    rows = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            t, span = header
            continue
        ctx_text, sep, row_text = line.partition(":")
        if not sep:
            raise TableFormatError(f"expected 'CONTEXT: d1 ... d{t}', got {line!r}", lineno)
        ctx_text = ctx_text.strip()
        if span == 0:
            if ctx_text != "-":
                raise TableFormatError(f"span-0 tables use '-' as the context, got {ctx_text!r}", lineno)
            ctx = ()
        else:
            if len(ctx_text) != span:
                raise TableFormatError(
                    f"context {ctx_text!r} has length {len(ctx_text)}, header says span={span}", lineno)
            try:
                ctx = parse_word(ctx_text, t)
            except ValueError as exc:
                raise TableFormatError(str(exc), lineno) from None
        if ctx in rows:
            raise TableFormatError(f"duplicate context {ctx_text}", lineno)
        try:
            row = tuple(int(tok) for tok in row_text.split())
        except ValueError:
            raise TableFormatError(f"row entries must be integers: {row_text.strip()!r}", lineno) from None
        bad = [d for d in row if not 0 <= d < t]
        if bad:
            raise TableFormatError(f"digit {bad[0]} is not below t={t}", lineno)
        if sorted(row) != list(range(t)):
            raise TableFormatError(f"row {row_text.strip()!r} is not a permutation of 0..{t - 1}", lineno)
        rows[ctx] = row
    if header is None:
        raise TableFormatError("missing 't=<int> span=<int>' header", last_line or 1)
    if len(rows) != t**span:
        have = set(rows)
        missing = next(w for w in Alphabet(t).words(span) if w not in have)
        raise TableFormatError(f"missing row for context {format_word(missing)}", last_line)
    return PreferenceFunction.from_mapping(t, span, rows)


def format_preference_table(pref: PreferenceFunction) -> str:
    lines = [f"t={pref.t} span={pref.span}"]
    for ctx, row in zip(pref.contexts(), pref.rows):
        lines.append(f"{format_word(ctx)}: " + " ".join(str(d) for d in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DigitSequence:
    """A finite (linear) digit sequence with its declared alphabet and order.

    ``halt_length`` is the number of order-n windows a generation run
    produced before halting; it is ``None`` for supplied sequences.
    ``wrapped`` marks output with the first ``order - 1`` digits repeated
    at the end.
    """

    t: int
    order: int
    digits: tuple
    origin: str = "supplied"
    halt_length: Optional[int] = None
    wrapped: bool = False

    def __post_init__(self):
        Alphabet(self.t)
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if self.origin not in ("generated", "supplied"):
            raise ValueError(f"unknown origin {self.origin!r}")
        object.__setattr__(self, "digits", check_word(self.digits, self.t))

    @classmethod
    def from_text(cls, text: str, t: int, order: int) -> "DigitSequence":
        return cls(t, order, parse_sequence(text, t))

    @property
    def text(self) -> str:
        return format_sequence(self.digits, self.t)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return self.text

    def unwrapped(self) -> "DigitSequence":
        if not self.wrapped:
            return self
        cut = len(self.digits) - (self.order - 1)
        return DigitSequence(self.t, self.order, self.digits[:cut], self.origin, self.halt_length)

    def windows(self) -> Iterator[Word]:
        n = self.order
        for i in range(len(self.digits) - n + 1):
            yield self.digits[i:i + n]

"""Command-line interface.

Exit codes: 0 on success (complete table, full de Bruijn sequence),
3 for a negative domain result (incomplete table, generation halted
short), 2 for usage and validation errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import complexity, format_cycle, is_complete
from .census import EnumerationTooLarge, count_by_complexity, count_de_bruijn, empirical_census
from .core import (
    DigitSequence,
    TableFormatError,
    format_preference_table,
    format_word,
    parse_preference_table,
    parse_word,
)
from .generator import (
    DEFAULT_MAX_WINDOWS,
    generate,
    is_de_bruijn,
    missing_windows,
    prefer_higher,
    prefer_opposite_binary,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


class UsageError(Exception):
    pass


def _read_table(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_preference_table(text)
    except TableFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_generate(args, out):
    if args.table:
        pref = _read_table(args.table)
        if args.t is not None and args.t != pref.t:
            raise UsageError(f"--t {args.t} does not match t={pref.t} in {args.table}")
    elif args.prefer_opposite:
        if args.t not in (None, 2):
            raise UsageError("--prefer-opposite is binary; use --t 2")
        pref = prefer_opposite_binary()
    else:
        if args.t is None:
            raise UsageError("--prefer-higher needs --t")
        pref = prefer_higher(args.t)
    n = args.order
    initial = None
    if args.initial is not None:
        initial = parse_word(args.initial, pref.t)
        if len(initial) != n:
            raise UsageError(f"--initial must have {n} digits")
        if any(initial):
            print(
                "warning: initial word is not all zeros; completeness results do not apply",
                file=sys.stderr,
            )
    seq = generate(pref, n, initial, wrap=args.wrap, max_windows=args.max_windows)
    print(seq.text, file=out)
    linear = seq.unwrapped()
    full = is_de_bruijn(linear)
    if args.stats:
        print(f"halt length: {seq.halt_length}", file=out)
        print(f"de Bruijn: {'yes' if full else 'no'}", file=out)
        if not full:
            missing = missing_windows(linear)
            print("missing windows: " + " ".join(format_word(w) for w in missing), file=out)
    return EXIT_OK if full else EXIT_NEGATIVE


def cmd_check(args, out):
    pref = _read_table(args.table)
    report = is_complete(pref)
    if report:
        print("complete", file=out)
        return EXIT_OK
    print("incomplete", file=out)
    if not report.zero_loop:
        zero = format_word((0,) * pref.span)
        print(f"least preferred digit after {zero} is {pref.rows[0][-1]}, not 0", file=out)
    for cyc in report.cycles:
        label = "self-loop" if len(cyc) == 1 else "cycle"
        print(f"{label}: {format_cycle(cyc)}", file=out)
    return EXIT_NEGATIVE


def cmd_complexity(args, out):
    text = args.seq
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        seq = DigitSequence.from_text(text, args.t, args.order)
        report = complexity(seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"complexity {report.span}", file=out)
    for k, ok in enumerate(report.feasible):
        print(f"span {k}: {'feasible' if ok else 'infeasible'}", file=out)
    print("witness:", file=out)
    out.write(format_preference_table(report.witness))
    return EXIT_OK


def cmd_census(args, out):
    try:
        table = empirical_census(args.t, args.order)
    except EnumerationTooLarge as exc:
        raise UsageError(str(exc)) from None
    print(table.line(), file=out)
    if args.modes:
        for s in range(args.order):
            lit = count_by_complexity(args.t, s, "paper")
            cor = count_by_complexity(args.t, s, "corrected")
            note = " (modes disagree)" if lit != cor else ""
            print(f"N_{s} paper-literal: {lit}, corrected: {cor}, census: {table.counts[s]}{note}", file=out)
    return EXIT_OK


def cmd_count(args, out):
    t, i = args.t, args.i
    if i >= 1:
        print(f"M({t},{i}) = {count_de_bruijn(t, i)}", file=out)
    lit = count_by_complexity(t, i, "paper")
    cor = count_by_complexity(t, i, "corrected")
    if args.mode == "paper":
        print(f"N_{i} paper-literal: {lit}", file=out)
    elif args.mode == "corrected":
        print(f"N_{i} corrected: {cor}", file=out)
    else:
        note = " (modes disagree)" if lit != cor else ""
        print(f"N_{i} paper-literal: {lit}, corrected: {cor}{note}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prefseq", description="De Bruijn sequences from preference functions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="run the greedy generator")
    p.add_argument("--t", type=int, help="alphabet size")
    p.add_argument("--order", type=int, required=True, help="window length n")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", metavar="FILE")
    src.add_argument("--prefer-higher", action="store_true")
    src.add_argument("--prefer-opposite", action="store_true")
    p.add_argument("--initial", metavar="WORD", help="initial word (default 0^n)")
    p.add_argument("--wrap", action="store_true", help="append the first n-1 digits")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--max-windows", type=int, default=DEFAULT_MAX_WINDOWS)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="decide completeness of a preference table")
    p.add_argument("--table", metavar="FILE", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complexity", help="minimal span regenerating a sequence")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seq", required=True, metavar="STRING|FILE")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("census", help="complexity histogram by exhaustive enumeration")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--modes", action="store_true", help="compare with closed-form counts")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("count", help="closed-form counts M(t,i) and N_i")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--mode", choices=("paper", "corrected", "both"), default="both")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: rank, unrank, count, sample, analyze.

Output is line-oriented and deterministic: results go to stdout (ranks and
counts as plain base-10 integers, words in their text encoding), diagnostics
to stderr.  Exit codes: 0 success, 1 usage or parse error, 2 domain error
(rank out of range, empty class, enumeration guard, k < 2).
"""

from __future__ import annotations

import argparse
import sys

from .borders import border_indicator, compute_lps, unbordered_prefix_indicator
from .counting import count_class
from .errors import BorderWordError
from .oracle import enumerate_class, rank_naive
from .ranking import rank_bordered, rank_unbordered
from .unranking import sample_words, unrank
from .words import Word, WordClass


class _Parser(argparse.ArgumentParser):
    # argparse reserves exit status 2 for usage errors; this protocol uses 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="borderwords",
        description="Rank, unrank, count, and uniformly sample bordered and "
        "unbordered words of length n over the alphabet {1..k}.",
    )
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="answer rank/count by brute-force enumeration instead of the "
        "recurrence (guarded; ignored by other commands)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def kind_option(p):
        p.add_argument(
            "--kind",
            required=True,
            choices=[kind.value for kind in WordClass],
            help="which listing to target",
        )

    p = sub.add_parser("rank", help="position of WORD in its class listing")
    kind_option(p)
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("word", metavar="WORD", help="word text, e.g. 212 or 2,1,12")

    p = sub.add_parser("unrank", help="word at rank RANK in the class listing")
    kind_option(p)
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.add_argument("-r", type=int, required=True, metavar="RANK", help="1-based rank")

    p = sub.add_parser("count", help="number of class members at (n, k)")
    kind_option(p)
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("-n", type=int, required=True, help="word length")

    p = sub.add_parser("sample", help="uniform random class members")
    kind_option(p)
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument(
        "--count",
        type=_positive_int,
        default=1,
        metavar="M",
        help="number of draws from one seeded generator (default 1)",
    )

    p = sub.add_parser("analyze", help="failure function and indicators of WORD")
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("word", metavar="WORD", help="word text")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return 0 if exc.code is None else exc.code
    try:
        _HANDLERS[args.command](args)
    except BorderWordError as exc:
        print(f"borderwords: error: [{type(exc).__name__}] {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"borderwords: error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_rank(args):
    word = Word.from_text(args.word, args.k)
    kind = WordClass(args.kind)
    if args.oracle:
        value = rank_naive(word, kind)
    elif kind is WordClass.BORDERED:
        value = rank_bordered(word)
    else:
        value = rank_unbordered(word)
    print(value)


def _cmd_unrank(args):
    word = unrank(args.r, args.n, args.k, WordClass(args.kind))
    print(word.to_text())


def _cmd_count(args):
    kind = WordClass(args.kind)
    if args.oracle:
        value = len(enumerate_class(args.n, args.k, kind))
    else:
        value = count_class(args.n, args.k, kind)
    print(value)


def _cmd_sample(args):
    for word in sample_words(args.n, args.k, WordClass(args.kind), args.seed, args.count):
        print(word.to_text())


def _cmd_analyze(args):
    word = Word.from_text(args.word, args.k)
    for row in (
        compute_lps(word),
        unbordered_prefix_indicator(word),
        border_indicator(word),
    ):
        print(" ".join(str(v) for v in row))


_HANDLERS = {
    "rank": _cmd_rank,
    "unrank": _cmd_unrank,
    "count": _cmd_count,
    "sample": _cmd_sample,
    "analyze": _cmd_analyze,
}


if __name__ == "__main__":
    sys.exit(main())

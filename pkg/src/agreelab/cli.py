"""Command line: ``agreelab parse`` and ``agreelab corpus``.

Exit status: 0 when everything matches (``parse``: a verdict was
produced), 1 on any corpus mismatch, 2 on usage, file or lexicon errors.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from agreelab import report as reporting
from agreelab.errors import LexiconError, UnknownWordError
from agreelab.corpus import load_corpus
from agreelab.harness import ENGINES, judge, run_rows
from agreelab.lcg.render import render_proof
from agreelab.lexicon import load_lexicon

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def default_lexicon() -> Path:
    return Path(str(resources.files("agreelab") / "data" / "agreement.lex"))


def default_corpus() -> Path:
    return Path(str(resources.files("agreelab") / "data" / "agreement_corpus.tsv"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agreelab",
        description="Judge sentences with a featured Lambek grammar and a unification comparator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="judge one sentence")
    p.add_argument("sentence", nargs="+", help="the sentence (one argument or several words)")
    p.add_argument("--engine", choices=ENGINES, default="lcg")
    p.add_argument("--lexicon", type=Path, default=None, help="lexicon file (default: shipped)")
    p.add_argument("--style", choices=("sequent", "nd"), default="nd",
                   help="proof display for the lcg engine")

    c = sub.add_parser("corpus", help="judge a corpus with every engine")
    c.add_argument("--corpus", type=Path, default=None, help="corpus TSV (default: shipped)")
    c.add_argument("--lexicon", type=Path, default=None, help="lexicon file (default: shipped)")
    c.add_argument("--format", choices=("table", "tsv"), default="table")
    c.add_argument("--figure", type=Path, default=None,
                   help="also draw the judgment matrix to this image file")
    return parser


def _cmd_parse(args) -> int:
    lexicon = load_lexicon(args.lexicon or default_lexicon())
    tokens = " ".join(args.sentence).split()
    result = judge(tokens, lexicon, args.engine)
    print(f"{' '.join(tokens)}: {result.verdict} ({args.engine})")
    if result.proof is not None:
        print()
        print(render_proof(result.proof, args.style, tokens if args.style == "nd" else None))
    elif args.engine == "lcg" and result.pool_bounded:
        print("(no proof with any coordination target from the candidate pool)")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    lexicon = load_lexicon(args.lexicon or default_lexicon())
    rows = load_corpus(args.corpus or default_corpus())
    report = run_rows(rows, lexicon)
    if args.format == "tsv":
        sys.stdout.write(reporting.format_tsv(report))
    else:
        print(reporting.format_table(report))
    if args.figure is not None:
        out = reporting.plot_report(report, args.figure)
        print(f"figure written to {out}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "parse":
            return _cmd_parse(args)
        return _cmd_corpus(args)
    except (OSError, LexiconError, UnknownWordError) as exc:
        print(f"agreelab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

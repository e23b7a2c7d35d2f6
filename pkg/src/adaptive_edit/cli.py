"""Command line entry point: ``dist`` for one pair, ``bench`` for a manifest.

Exit codes: 0 success, 1 usage error, 2 IO error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .report import (
    ALGORITHMS,
    METRICS,
    PRESET_TRUNCATE_BYTES,
    InputError,
    read_manifest,
    reports_to_csv,
    run_experiment,
    run_pair,
    write_reports,
)
from .results import DEFAULT_DENSE_BUDGET, ResourceBudgetError

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_list(choices):
    def parse(text):
        items = [t.strip().lower() for t in text.split(",") if t.strip()]
        bad = [t for t in items if t not in choices]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"expected a comma list from {','.join(choices)}")
        return items
    return parse


def _add_common(p):
    p.add_argument("--tokenize", choices=("words", "bytes"), default="words")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--truncate-bytes", type=int, default=None, metavar="N",
                   help="only read the first N bytes of each file")
    g.add_argument("--truncate-32k", dest="truncate_bytes", action="store_const", const=PRESET_TRUNCATE_BYTES,
                   help=f"shorthand for --truncate-bytes {PRESET_TRUNCATE_BYTES}")
    p.add_argument("--dense-budget", type=int, default=DEFAULT_DENSE_BUDGET,
                   help="largest memo (cells) a classic run may allocate")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adaptive-edit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dist", help="distance between two files")
    d.add_argument("--metric", required=True, type=str.lower, choices=METRICS)
    d.add_argument("--algo", required=True, type=str.lower, choices=ALGORITHMS)
    d.add_argument("--source", required=True)
    d.add_argument("--target", required=True)
    d.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(d)

    b = sub.add_parser("bench", help="run every pair of a manifest CSV")
    b.add_argument("--manifest", required=True, help="CSV with columns source_path,target_path")
    b.add_argument("--out", required=True, help="output path; .csv and .json are written next to it")
    b.add_argument("--metrics", type=_csv_list(METRICS), default=["di", "dir", "dr"])
    b.add_argument("--algos", type=_csv_list(ALGORITHMS), default=["classic", "adaptive"])
    b.add_argument("--keep-going", action="store_true", help="record failing rows and continue")
    b.add_argument("--jobs", type=int, default=1)
    _add_common(b)
    return parser


def _dist(args) -> int:
    try:
        rep = run_pair(args.source, args.target, args.metric, args.algo, args.tokenize,
                       args.truncate_bytes, args.dense_budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2))
    else:
        sys.stdout.write(reports_to_csv([rep]))
    return EXIT_OK


def _bench(args) -> int:
    pairs = read_manifest(args.manifest)
    reports = run_experiment(pairs, args.metrics, args.algos, None, tokenize_mode=args.tokenize,
                             truncate=args.truncate_bytes, dense_budget=args.dense_budget,
                             keep_going=args.keep_going, jobs=args.jobs)
    csv_path, json_path = write_reports(reports, args.out)
    print(f"wrote {len(reports)} rows to {csv_path} and {json_path}", file=sys.stderr)
    failed = [r for r in reports if r.error]
    if failed and not args.keep_going:
        return EXIT_BUDGET if failed[0].error.startswith("ResourceBudgetError") else EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return _dist(args) if args.command == "dist" else _bench(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

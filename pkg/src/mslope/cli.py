"""
Command line front end.

    mslope analyze "1/2,1/3,-2/3" [--format json|csv|plain] [--restricted]
    mslope analyze -i expressions.txt --format csv --out report.csv
    mslope verify --count 1000 --seed 42
    mslope enumerate "1/2,1/3,-2/3" [--no-minimality]
    mslope svg "1/2,1/3,-2/3" --out figure.svg
    mslope random --count 5 --seed 1

Set MSLOPE_LOG=DEBUG (or INFO, WARNING, ...) for log output on stderr.
"""
import argparse
import json
import logging
import os
import random
import re
import sys

from .montesinos import ExpressionError, is_knot, link_reason, parse_expression
from .edgepath import EdgepathError, slope_bounds
from .enumerator import EnumerationLimitError, EnumerationLimits, verify_twist_ordering
from .campaign import CampaignConfig, random_expression, run_verification
from .svg import render_svg
from . import report

log = logging.getLogger("mslope")


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _expressions(args):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
        return [ln for ln in lines if ln and not ln.startswith("#")]
    if not args.expression:
        raise SystemExit("error: give an expression or --input FILE")
    return [args.expression]


def _parse_knot(text):
    expr = parse_expression(text)
    if not is_knot(expr).is_knot:
        raise EdgepathError(f"{expr} is a link, not a knot: {link_reason(expr)}")
    return expr


def cmd_analyze(args):
    reports = [slope_bounds(_parse_knot(t)) for t in _expressions(args)]
    if args.format == "json":
        text = report.to_json(reports)
    elif args.format == "csv":
        text = report.to_csv(reports)
    else:
        text = report.to_plain(reports, show_restricted=args.restricted)
    _emit(text, args.out)
    return 0


def cmd_verify(args):
    config = CampaignConfig(count=args.count, seed=args.seed,
                            max_denominator=args.max_denominator,
                            minimality=not args.no_minimality, jobs=args.jobs)
    summary = run_verification(config)
    _emit(json.dumps(summary, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if summary["ok"] else 1


def cmd_enumerate(args):
    limits = EnumerationLimits(max_denominator=args.max_denominator)
    results = [verify_twist_ordering(_parse_knot(t), limits, not args.no_minimality)
               for t in _expressions(args)]
    payload = results[0] if len(results) == 1 else results
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if all(r["failed"] == 0 for r in results) else 1


def cmd_svg(args):
    _emit(render_svg(_parse_knot(args.expression)), args.out)
    return 0


def cmd_random(args):
    config = CampaignConfig(count=args.count, seed=args.seed,
                            max_denominator=args.max_denominator)
    rng = random.Random(args.seed)
    lines = [random_expression(config, rng, knot=not args.links).text()
             for _ in range(args.count)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mslope",
        description="Boundary-slope bounds for Montesinos knots from crossing signs.")
    sub = parser.add_subparsers(dest="command", required=True)
    # let "-1/2,1/3,1/7" through as a positional argument
    negative = re.compile(r"^-\d")

    def common(p, expression=True, default_den=12):
        if expression:
            p.add_argument("expression", nargs="?", help='e.g. "1/2,1/3,-2/3"')
            p.add_argument("-i", "--input", help="file with one expression per line")
        p.add_argument("--out", help="write to this file instead of stdout")
        p.add_argument("--max-denominator", type=int, default=default_den)

    p = sub.add_parser("analyze", help="slope bounds and crossing counts")
    common(p)
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--restricted", action="store_true", help="print the restricted expression")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="random verification campaign")
    common(p, expression=False)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-minimality", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="check twist ordering on enumerated candidates")
    common(p, default_den=64)
    p.add_argument("--no-minimality", action="store_true",
                   help="drop the same-triangle rule when enumerating")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("svg", help="draw the edgepath systems")
    p.add_argument("expression")
    p.add_argument("--out")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("random", help="print seeded random knot expressions")
    common(p, expression=False)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--links", action="store_true", help="do not filter out links")
    p.set_defaults(func=cmd_random)
    for p in sub.choices.values():
        p._negative_number_matcher = negative
    return parser


def main(argv=None):
    level = os.environ.get("MSLOPE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExpressionError, EdgepathError, EnumerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 when the command succeeds and every report verdict passes,
2 when any verdict fails, 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .approx import DeltaSequence, TailUnionSpec, approx_order_set, parse_delta, tail_union
from .arcs import ArcSet
from .circle import CirclePoint, format_fraction, parse_fraction
from .density import density_profile
from .ergodic import AffineCircleMap, invariant_set_search
from .experiments import (
    ExperimentReport,
    ReportRow,
    cassels_experiment,
    duffin_schaeffer_classify,
    gallagher_experiment,
    membership_witnesses,
)
from .numtheory import parse_predicate


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1; 2 is reserved for failed verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_delta(text: str) -> DeltaSequence:
    if not text.startswith("{") and os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    return parse_delta(text)


def _load_arcset(text: str) -> ArcSet:
    if not text.startswith("{") and os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    return ArcSet.from_json(text)


def _point(text: str) -> CirclePoint:
    return CirclePoint(parse_fraction(text))


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _fraction_list(text: str) -> list[Fraction]:
    return [parse_fraction(v) for v in text.split(",") if v.strip()]


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_report(report: ExperimentReport, args) -> int:
    text = report.to_csv() if args.output == "csv" else report.to_json()
    _write(text, args.out)
    return 0 if report.all_pass() else 2


def _add_io_flags(sub, default_output: str = "json") -> None:
    sub.add_argument("--output", choices=("json", "csv"), default=default_output)
    sub.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def _cmd_gallagher(args) -> int:
    report = gallagher_experiment(_load_delta(args.delta), _int_list(args.n_min_schedule), args.n_max)
    return _emit_report(report, args)


def _cmd_cassels(args) -> int:
    report = cassels_experiment(
        _load_delta(args.delta),
        parse_fraction(args.m),
        parse_predicate(args.pred),
        args.n_min,
        args.n_max,
    )
    return _emit_report(report, args)


def _cmd_duffin_schaeffer(args) -> int:
    report = duffin_schaeffer_classify(_load_delta(args.delta), args.cap)
    return _emit_report(report, args)


def _cmd_witnesses(args) -> int:
    witnesses = membership_witnesses(_point(args.x), _load_delta(args.delta), args.n_max)
    if args.output == "csv":
        text = "n\n" + "\n".join(str(n) for n in witnesses) + "\n"
    else:
        text = json.dumps({"x": args.x, "n_max": args.n_max, "witnesses": witnesses}, indent=2)
    _write(text, args.out)
    return 0


def _arcset_csv(s: ArcSet) -> list[str]:
    return [
        f"{format_fraction(a.start.value)},{format_fraction(a.length)}" for a in s.arcs
    ]


def _cmd_ao(args) -> int:
    if (args.radius is None) == (args.delta is None):
        raise ValueError("provide exactly one of --radius or --delta")
    radius = parse_fraction(args.radius) if args.radius else _load_delta(args.delta).eval_at(args.n)
    s = approx_order_set(args.n, radius)
    if args.output == "csv":
        text = "start,length\n" + "\n".join(_arcset_csv(s)) + "\n"
    else:
        text = json.dumps(s.to_json_dict(), indent=2)
    _write(text, args.out)
    return 0


def _cmd_measure(args) -> int:
    if args.set is not None:
        if args.delta is not None:
            raise ValueError("--set and --delta are mutually exclusive")
        s = _load_arcset(args.set)
        params: dict[str, object] = {"set": "explicit"}
    else:
        if args.delta is None or args.n_min is None or args.n_max is None:
            raise ValueError("need --set, or --delta with --n-min and --n-max")
        s = tail_union(
            TailUnionSpec(args.n_min, args.n_max, parse_predicate(args.pred), _load_delta(args.delta))
        )
        params = {
            "delta": args.delta,
            "pred": args.pred,
            "n_min": args.n_min,
            "n_max": args.n_max,
        }
    report = ExperimentReport("measure", params=params)
    report.rows.append(ReportRow("measure", s.measure))
    return _emit_report(report, args)


def _cmd_ergodic_search(args) -> int:
    t = AffineCircleMap(args.n, _point(args.x))
    sets = invariant_set_search(t, args.grid)
    if args.output == "csv":
        lines = ["set_index,start,length"]
        for i, s in enumerate(sets):
            rows = _arcset_csv(s) or [","]
            lines.extend(f"{i},{row}" for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([s.to_json_dict() for s in sets], indent=2)
    _write(text, args.out)
    return 0


def _cmd_density(args) -> int:
    profile = density_profile(_load_arcset(args.set), _point(args.x), _fraction_list(args.eps))
    if args.output == "json":
        text = json.dumps(
            {"rows": [{"eps": format_fraction(e), "ratio": format_fraction(r)} for e, r in profile]},
            indent=2,
        )
    else:
        text = "eps,ratio\n" + "\n".join(
            f"{format_fraction(e)},{format_fraction(r)}" for e, r in profile
        ) + "\n"
    _write(text, args.out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="circlelab", description=__doc__)
    subs = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = subs.add_parser("gallagher", help="tail-union measures along a truncation schedule")
    p.add_argument("--delta", required=True, help="delta sequence (JSON, inline, or file)")
    p.add_argument("--n-min-schedule", required=True, help="comma-separated truncation starts")
    p.add_argument("--n-max", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_gallagher)

    p = subs.add_parser("cassels", help="compare tail unions at radii delta and m*delta")
    p.add_argument("--delta", required=True)
    p.add_argument("--m", required=True, help="positive rational scaling factor")
    p.add_argument("--pred", default="all")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_cassels)

    p = subs.add_parser("duffin-schaeffer", help="totient-series partial sums and classification")
    p.add_argument("--delta", required=True)
    p.add_argument("--cap", type=int, required=True, help="largest partial-sum cutoff")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_duffin_schaeffer)

    p = subs.add_parser("witnesses", help="indices n with an order-n point delta_n-close to x")
    p.add_argument("--x", required=True, help="rational point p/q")
    p.add_argument("--delta", required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_witnesses)

    p = subs.add_parser("ao", help="approximate-order set for a single n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", help="thickening radius as a rational")
    p.add_argument("--delta", help="delta sequence, evaluated at n")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_ao)

    p = subs.add_parser("measure", help="exact measure of an arc set or tail union")
    p.add_argument("--set", help="arc-set JSON (inline or file)")
    p.add_argument("--delta")
    p.add_argument("--pred", default="all")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_measure)

    p = subs.add_parser("ergodic-search", help="grid-cell unions invariant under y -> n*y + x")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", default="0", help="offset as a rational, e.g. 0/1")
    p.add_argument("--grid", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_ergodic_search)

    p = subs.add_parser("density", help="density ratios of a set at a point along an eps schedule")
    p.add_argument("--set", required=True, help="arc-set JSON (inline or file)")
    p.add_argument("--x", required=True)
    p.add_argument("--eps", required=True, help="comma-separated decreasing radii")
    _add_io_flags(p, default_output="csv")
    p.set_defaults(func=_cmd_density)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors and --help
        return int(exc.code or 0)
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"circlelab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

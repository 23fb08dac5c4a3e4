"""Command-line interface.

Four subcommands: `report` prints every invariant of one knot, `trace`
prints its pinch sequence, `table` tabulates reports over a parameter box,
and `verify` runs the exhaustive identity checks.  Exit codes: 0 success,
1 verification found counterexamples, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import cf
from .errors import CrosscapError
from .genus import GenusReport, genus_report
from .knot import PinchRecord, StopRule, TorusKnot, normalize, normalized_knots, pinch_sequence
from .verify import CheckOutcome, run_all

__all__ = ["main", "CSV_COLUMNS"]

CSV_COLUMNS = [
    "p",
    "q",
    "k",
    "a",
    "ell",
    "beta1_F",
    "gamma3",
    "gamma4_lower",
    "gamma4_upper",
    "gamma4_exact",
    "gap_lb_num",
    "gap_lb_den",
    "orientable_genus",
]


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _trace_row(record: PinchRecord) -> dict:
    return {
        "from": [record.source.p, record.source.q],
        "to": [record.result.p, record.result.q],
        "t": record.witness.t,
        "h": record.witness.h,
        "sign": str(record.sign) if record.sign is not None else None,
    }


def _report_dict(report: GenusReport) -> dict:
    return {
        "knot": {"p": report.knot.p, "q": report.knot.q},
        "k": report.k,
        "a": report.a,
        "ell": report.ell,
        "beta1_F": report.beta1_F,
        "gamma3": report.gamma3,
        "gamma4": {
            "lower": report.gamma4.lower,
            "upper": report.gamma4.upper,
            "exact": report.gamma4.exact,
            "provenance": report.gamma4.provenance,
        },
        "gap_lower_bound": {
            "num": report.gap_lower_bound.numerator,
            "den": report.gap_lower_bound.denominator,
        },
        "orientable_genus": report.orientable_genus,
        "trace": [_trace_row(record) for record in report.trace],
    }


def _report_csv_row(report: GenusReport) -> list[str]:
    exact = report.gamma4.exact
    return [
        str(report.knot.p),
        str(report.knot.q),
        str(report.k),
        str(report.a),
        str(report.ell),
        str(report.beta1_F),
        str(report.gamma3),
        str(report.gamma4.lower),
        str(report.gamma4.upper),
        "" if exact is None else str(exact),
        str(report.gap_lower_bound.numerator),
        str(report.gap_lower_bound.denominator),
        str(report.orientable_genus),
    ]


def _trace_line(record: PinchRecord) -> str:
    sign = str(record.sign) if record.sign is not None else "n/a"
    before = cf.expand(record.source.fraction())
    after = cf.expand(record.result.fraction())
    return (
        f"{record.source} -> {record.result}"
        f"   t={record.witness.t} h={record.witness.h} sign={sign}"
        f"   {before} -> {after}"
    )


def _report_human(report: GenusReport) -> str:
    knot = report.knot
    g4 = report.gamma4
    exact = "-" if g4.exact is None else str(g4.exact)
    lines = [
        f"{knot}",
        f"  division:          {knot.p} = {knot.q}*{report.k} + {report.a}  (k={report.k}, a={report.a})",
        f"  terminal unknot:   T({report.ell},1)  (ell={report.ell})",
        f"  beta1_F:           {report.beta1_F}  (pinch moves to first unknot; gamma4 upper bound)",
        f"  gamma3:            {report.gamma3}  (crosscap number)",
        f"  gamma4:            lower={g4.lower} upper={g4.upper} exact={exact} ({g4.provenance})",
        f"  gap lower bound:   {report.gap_lower_bound}  (k/2)",
        f"  orientable genus:  {report.orientable_genus}",
    ]
    if report.split is not None:
        lines.append(f"  split:             {report.split.first} + {report.split.second}")
    lines.append("  pinch trace:")
    lines.extend(f"    {_trace_line(record)}" for record in report.trace)
    return "\n".join(lines) + "\n"


def _table_human(reports: list[GenusReport]) -> str:
    rows = [CSV_COLUMNS] + [_report_csv_row(report) for report in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"


def _outcome_dict(outcome: CheckOutcome) -> dict:
    return {
        "check": outcome.check_name,
        "range": outcome.range_description,
        "cases_checked": outcome.cases_checked,
        "failures": outcome.failures_total,
        "passed": outcome.passed,
        "counterexamples": [
            {"input": c.input, "expected": c.expected, "actual": c.actual}
            for c in outcome.counterexamples
        ],
    }


def _verify_human(outcomes: list[CheckOutcome]) -> str:
    name_width = max(len(o.check_name) for o in outcomes)
    lines = []
    for outcome in outcomes:
        status = "PASS" if outcome.passed else f"FAIL ({outcome.failures_total} failures)"
        lines.append(
            f"{outcome.check_name.ljust(name_width)}  cases={outcome.cases_checked:<7d} {status}"
        )
        for c in outcome.counterexamples[:5]:
            lines.append(f"  counterexample: {c.input}  expected {c.expected}, got {c.actual}")
    return "\n".join(lines) + "\n"


def _matches_filter(knot: TorusKnot, name: str) -> bool:
    if name == "all":
        return True
    if name == "even":
        return knot.p % 2 == 0
    if name == "odd":
        return knot.p % 2 == 1
    if name == "batson":
        return knot.p % 2 == 0 and knot.q == knot.p - 1
    if name == "family-km1":
        # T(km+1, m) with k, m odd: p = 1 mod q and an odd quotient.
        return knot.p % knot.q == 1 and ((knot.p - 1) // knot.q) % 2 == 1
    raise ValueError(f"unknown filter: {name}")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_report(args: argparse.Namespace) -> int:
    report = genus_report(normalize(args.p, args.q))
    if args.format == "json":
        sys.stdout.write(_json_text(_report_dict(report)))
    elif args.format == "csv":
        sys.stdout.write(_csv_text([CSV_COLUMNS, _report_csv_row(report)]))
    else:
        sys.stdout.write(_report_human(report))
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    stop = StopRule.ZERO if args.stop == "zero" else StopRule.FIRST_UNKNOT
    records = pinch_sequence(normalize(args.p, args.q), stop)
    for record in records:
        sys.stdout.write(_trace_line(record) + "\n")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.pmax < 2 or args.qmax < 2:
        print("error: --pmax and --qmax must be at least 2", file=sys.stderr)
        return 2
    reports = [
        genus_report(knot)
        for knot in normalized_knots(args.pmax, args.qmax)
        if _matches_filter(knot, args.filter)
    ]
    if args.format == "json":
        text = _json_text([_report_dict(report) for report in reports])
    elif args.format == "human":
        text = _table_human(reports)
    else:
        text = _csv_text([CSV_COLUMNS] + [_report_csv_row(report) for report in reports])
    _emit(text, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max < 3:
        print("error: --max must be at least 3", file=sys.stderr)
        return 2
    outcomes = run_all(args.max)
    if args.format == "json":
        sys.stdout.write(_json_text([_outcome_dict(outcome) for outcome in outcomes]))
    else:
        sys.stdout.write(_verify_human(outcomes))
    return 0 if all(outcome.passed for outcome in outcomes) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscap",
        description="Exact crosscap numbers and nonorientable four-genus bounds of torus knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="all invariants of one torus knot")
    report.add_argument("p", type=int)
    report.add_argument("q", type=int)
    report.add_argument("--format", choices=["human", "json", "csv"], default="human")
    report.set_defaults(handler=_cmd_report)

    trace = sub.add_parser("trace", help="pinch sequence of one torus knot")
    trace.add_argument("p", type=int)
    trace.add_argument("q", type=int)
    trace.add_argument("--stop", choices=["first-unknot", "zero"], default="first-unknot")
    trace.set_defaults(handler=_cmd_trace)

    table = sub.add_parser("table", help="invariant table over a parameter range")
    table.add_argument("--pmax", type=int, required=True)
    table.add_argument("--qmax", type=int, required=True)
    table.add_argument(
        "--filter",
        choices=["all", "even", "odd", "batson", "family-km1"],
        default="all",
    )
    table.add_argument("--format", choices=["human", "json", "csv"], default="csv")
    table.add_argument("--out", default=None)
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="run the exhaustive identity checks")
    verify.add_argument("--max", type=int, required=True)
    verify.add_argument("--format", choices=["human", "json"], default="human")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CrosscapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

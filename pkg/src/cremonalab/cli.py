"""Command-line front end.

Commands: ``verify lemma52 --n <list>``, ``enumerate --degree <d>``,
``dp5 check``, ``conic simulate --seed <s> --trials <t>``,
``jordan <groupfile>``, ``report <suite>``.  Exit codes: 0 all-pass,
1 any fail, 2 usage error.  Output is deterministic for fixed options
and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import conic_fibers, dp5, pole_cycles, report, suites
from .groups import DEFAULT_CAP, CapExceeded
from .groupfiles import GroupFileError, load_group
from .jordan import report_fragment

__all__ = ["main", "build_parser"]

USAGE_EXIT = 2

ENUMERATE_COLUMNS = ("labels", "genus", "K2", "symmetry_order", "symmetry_kind",
                     "witness_base", "witness_word")
DP5_COLUMNS = ("name", "order", "rational_line_exists", "fix_space_dim",
               "complex_note", "caveat")


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("--n wants a comma-separated integer list, got %r" % text)
    if not values:
        raise argparse.ArgumentTypeError("--n list is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremonalab",
        description="Verification suites for finite-group and surface-configuration claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one named claim family")
    p_verify.add_argument("target", choices=["lemma52"])
    p_verify.add_argument("--n", type=_parse_n_list, default=suites.DEFAULT_NS,
                          help="comma-separated n values (default 5,7,11)")
    p_verify.add_argument("--allow-bad-n", action="store_true",
                          help="record hypothesis-violating n as informational instead of failing")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_verify.add_argument("--emit", choices=["json", "md"], default="json")

    p_enum = sub.add_parser("enumerate", help="boundary-cycle configurations for one degree")
    p_enum.add_argument("--degree", type=int, required=True)
    p_enum.add_argument("--emit", choices=["json", "md"], default="json")

    p_dp5 = sub.add_parser("dp5", help="rational invariant-line checks")
    p_dp5.add_argument("action", choices=["check"])
    p_dp5.add_argument("--emit", choices=["json", "md"], default="json")

    p_conic = sub.add_parser("conic", help="fiber-model simulation")
    p_conic.add_argument("action", choices=["simulate"])
    p_conic.add_argument("--seed", type=int, default=0)
    p_conic.add_argument("--trials", type=int, default=500)
    p_conic.add_argument("--emit", choices=["json", "md"], default="json")

    p_jordan = sub.add_parser("jordan", help="minimal abelian-normal index of a group file")
    p_jordan.add_argument("groupfile")
    p_jordan.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p_report = sub.add_parser("report", help="run a verification suite")
    p_report.add_argument("suite", choices=list(suites.SUITE_NAMES))
    p_report.add_argument("--emit", choices=["json", "md"], default="json")
    p_report.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_report.add_argument("--seed", type=int, default=0)
    p_report.add_argument("--trials", type=int, default=500)
    p_report.add_argument("--parallel", action="store_true",
                          help="run the sub-suites of 'all' concurrently")
    return parser


def _emit_table(rows: list[dict], columns, fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = rows
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = ["| " + " | ".join(columns) + " |",
             "| " + " | ".join("---" for _ in columns) + " |"]
    for row in rows:
        cells = []
        for col in columns:
            value = row[col]
            if isinstance(value, (list, tuple, dict)):
                cells.append("`" + json.dumps(value, separators=(",", ":")) + "`")
            else:
                cells.append(str(value))
        lines.append("| " + " | ".join(cells) + " |")
    lines.append("")
    lines.append("%d rows." % len(rows))
    return "\n".join(lines) + "\n"


def _run_verify(args) -> int:
    rows = suites.run_suite("lemma52", ns=args.n, cap=args.cap, allow_bad_n=args.allow_bad_n)
    sys.stdout.write(report.emit(rows, args.emit))
    return report.exit_code(rows)


def _run_enumerate(args) -> int:
    try:
        rows = pole_cycles.configuration_rows(args.degree)
    except pole_cycles.InvalidDegree as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_EXIT
    sys.stdout.write(_emit_table(rows, ENUMERATE_COLUMNS, args.emit, {"degree": args.degree}))
    return 0


def _run_dp5(args) -> int:
    line_reports = dp5.dp5_suite()
    rows = [
        {
            "name": lr.name,
            "order": lr.subgroup_order,
            "rational_line_exists": lr.has_rational_line,
            "fix_space_dim": lr.fix_space_dim,
            "complex_note": list(lr.complex_note),
            "caveat": lr.caveat,
        }
        for lr in line_reports
    ]
    sys.stdout.write(_emit_table(rows, DP5_COLUMNS, args.emit))
    verdicts = {lr.name: lr.has_rational_line for lr in line_reports}
    return 0 if verdicts == suites.EXPECTED_LINE_VERDICTS else 1


def _run_conic(args) -> int:
    sim = conic_fibers.simulate(args.seed, args.trials)
    if args.emit == "json":
        sys.stdout.write(json.dumps(sim, sort_keys=True, indent=2) + "\n")
    else:
        keys = sorted(sim)
        rows = [{"key": k, "value": sim[k]} for k in keys]
        sys.stdout.write(_emit_table(rows, ("key", "value"), "md"))
    clean = (sim["greedy_failures"] == 0 and sim["invariance_failures"] == 0
             and sim["scan_disagreements"] == 0 and sim["bound_violations"] == 0)
    return 0 if clean else 1


def _run_jordan(args) -> int:
    try:
        group = load_group(args.groupfile, cap=args.cap)
    except FileNotFoundError:
        sys.stderr.write("error: no such file: %s\n" % args.groupfile)
        return USAGE_EXIT
    except GroupFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_EXIT
    try:
        fragment = report_fragment(group, cap=args.cap)
    except CapExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    sys.stdout.write(json.dumps(fragment, sort_keys=True, indent=2) + "\n")
    return 0


def _run_report(args) -> int:
    if args.parallel and args.suite == "all":
        # Sub-suites run concurrently; assembly stays single-threaded and
        # ordered, so the output matches the sequential run byte for byte.
        names = ("lemma52", "prop44", "dp5", "conic")
        with ThreadPoolExecutor(max_workers=len(names)) as pool:
            futures = [
                pool.submit(suites.run_suite, name, ns=suites.DEFAULT_NS,
                            seed=args.seed, trials=args.trials, cap=args.cap)
                for name in names
            ]
            rows = [r for future in futures for r in future.result()]
        rows.extend(suites.paper_constant_rows())
    else:
        rows = suites.run_suite(args.suite, seed=args.seed, trials=args.trials, cap=args.cap)
    sys.stdout.write(report.emit(rows, args.emit))
    return report.exit_code(rows)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help; pass both through.
        return int(exc.code or 0)
    handlers = {
        "verify": _run_verify,
        "enumerate": _run_enumerate,
        "dp5": _run_dp5,
        "conic": _run_conic,
        "jordan": _run_jordan,
        "report": _run_report,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Subcommands:
  constants    print the constants table for a dimension
  spectrum     compute a spectrum and export it as CSV
  verify       run the full check suite of a scenario config
  convergence  refinement study for a grid scenario

Exit codes: 0 all checks pass, 1 at least one genuine violation,
2 configuration or usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .errors import InputDataError, NumericalError
from .specfun import constants_table

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _load_config(path: str) -> dict:
    p = Path(path)
    if not p.is_file():
        raise InputDataError(f"config file not found: {path}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputDataError(f"config is not valid JSON: {exc}") from exc


def _cmd_constants(args) -> int:
    table = constants_table(args.dim, p_list=args.p or [1.0, 2.0])
    out = harness._jsonable(table)
    text = json.dumps(out, sort_keys=True, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    config = _load_config(args.config)
    report = harness.run_scenario({**config, "checks": []})
    values = report["spectrum"]["values"]
    if args.out:
        harness.write_spectrum_csv(values, args.out)
        print(f"wrote {len(values)} eigenvalues to {args.out}")
    else:
        for v in values:
            print(f"{v:.17g}")
    return EXIT_OK


def _report_exit_code(report: dict) -> int:
    if not report["overall_pass"]:
        return EXIT_VIOLATION
    if report["check_errors"]:
        return EXIT_NUMERICAL
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = _load_config(args.config)
    report = harness.run_scenario(config)
    if args.out:
        harness.write_report(report, args.out)
        csv_path = Path(args.out).with_suffix(".csv")
        harness.write_spectrum_csv(report["spectrum"]["values"], csv_path)
    for chk in report["checks"]:
        status = "PASS" if chk["passed"] else "FAIL"
        if not chk["applicable"]:
            status = "N/A"
        elif chk["diagnostic"]:
            status += " (diagnostic)"
        print(f"{status:18s} {chk['name']:26s} margin={chk['margin']:+.6e}")
    for err in report["check_errors"]:
        print(f"ERROR              {err['check']:26s} {err['error']}: {err['message']}")
    print(f"overall: {'pass' if report['overall_pass'] else 'FAIL'}")
    return _report_exit_code(report)


def _cmd_convergence(args) -> int:
    config = _load_config(args.config)
    report = harness.convergence_study(config, args.levels)
    if args.out:
        harness.write_report(report, args.out)
    for i, orders in enumerate(report["observed_orders"]):
        print(f"pair {i}: orders {['%.3f' % o for o in orders]}")
    if report["failures"]:
        for f in report["failures"]:
            print(f"level {f['level']} failed: {f['message']}")
        return EXIT_NUMERICAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magspec",
        description="Verify eigenvalue inequalities for magnetic Schrodinger operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the constants table")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--p", type=float, action="append")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_constants)

    p = sub.add_parser("spectrum", help="compute and export a spectrum")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("verify", help="run the full check suite")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("convergence", help="grid refinement study")
    p.add_argument("--config", required=True)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_convergence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

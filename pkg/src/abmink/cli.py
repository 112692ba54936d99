"""Command line entry point.

    abmink run <config> [--format table|csv|json] [--out PATH]
    abmink list
    abmink check [--tol X]

``check`` runs the built-in cross-check suite and exits nonzero if any
residual exceeds its bound; the relative tolerance defaults to 1e-6 and can
be overridden with --tol or the ABMINK_TOL environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .core import RegimeError
from .runner import (
    DEFAULT_TOL,
    SCENARIO_NAMES,
    ConfigError,
    check_suite,
    emit,
    parse_config,
    run,
)


def _cmd_run(args) -> int:
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        request = parse_config(text)
        report = run(request)
        payload = emit(report, args.format)
    except (ConfigError, RegimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    if report.errors:
        for err in report.errors:
            print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


def _cmd_list(args) -> int:
    for name in SCENARIO_NAMES:
        print(name)
    return 0


def _cmd_check(args) -> int:
    tol = args.tol
    if tol is None:
        tol = float(os.environ.get("ABMINK_TOL", DEFAULT_TOL))
    results = check_suite(tol)
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        ok = ok and res.passed
        print(f"{status} {res.name}: residual {res.residual:.3e} "
              f"(bound {res.bound:.3e})")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="abmink",
        description=("Abraham/Minkowski electromagnetic momentum toolkit: "
                     "scenario runner and cross-checks."))
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evaluate a scenario config file")
    p_run.add_argument("config", help="path to a key = value config document")
    p_run.add_argument("--format", choices=("table", "csv", "json"),
                       default="table")
    p_run.add_argument("--out", help="write the report here instead of stdout")
    p_run.set_defaults(fn=_cmd_run)

    p_list = sub.add_parser("list", help="list the scenario names")
    p_list.set_defaults(fn=_cmd_list)

    p_check = sub.add_parser("check", help="run the built-in cross-check suite")
    p_check.add_argument("--tol", type=float, default=None,
                         help="relative tolerance (default ABMINK_TOL or 1e-6)")
    p_check.set_defaults(fn=_cmd_check)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())

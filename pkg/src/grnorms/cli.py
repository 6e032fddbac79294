"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 solver non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import report, solvers
from .errors import BudgetExceededError, ConvergenceError, DomainError, GRError

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_SOLVER = 0, 1, 2, 3


def _emit(text: str, args, filename: str) -> None:
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / filename, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record(fields: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fields, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields.keys())
    w.writerow(repr(v) if isinstance(v, float) else v for v in fields.values())
    return buf.getvalue()


def cmd_table(args) -> int:
    if args.alpha_driven:
        alphas = report.TABLE_ALPHA if args.alpha is None else args.alpha
        rows = report.compute_table(alpha_list=alphas)
        meta = {"driven_by": "alpha", "alpha": list(alphas)}
    else:
        p_list = report.TABLE_P if args.p is None else args.p
        rows = report.compute_table(p_list=p_list)
        meta = {"driven_by": "p", "p": list(p_list)}
    meta["note"] = (
        "the printed alpha at p=1.67 is 1.4993, not 1/(p-1)=1.4925; "
        "use --alpha-driven to reproduce that row"
    )
    _emit(report.render_table(rows, args.format, args.raw, meta), args, f"table.{args.format}")
    failures = [r for r in rows if isinstance(r, GRError)]
    if failures:
        for exc in failures:
            print(f"row failed: {exc}", file=sys.stderr)
        return EXIT_USAGE if all(isinstance(e, DomainError) for e in failures) else EXIT_SOLVER
    return EXIT_OK


def cmd_figures(args) -> int:
    out = args.out or "figures"
    try:
        paths = report.write_figures(out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for p in paths:
        print(p)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.tol > 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    results = report.run_verification(args.tol, args.grid)
    if args.format == "json":
        print(json.dumps([asdict(r) for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name} margin={r.margin:.3e} {r.detail}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bmo(args) -> int:
    _emit(_record(report.bmo_summary(), args.format), args, f"bmo.{args.format}")
    return EXIT_OK


def cmd_norm(args) -> int:
    _emit(_record(asdict(solvers.norm_realline(args.alpha)), args.format), args, f"norm.{args.format}")
    return EXIT_OK


def cmd_exponent(args) -> int:
    e = solvers.limiting_exponent(args.eps)
    fields = {
        "eps": args.eps, "p": e.p, "p_minus": e.p_minus,
        "alpha_plus": e.alpha_plus, "alpha_minus": e.alpha_minus, "residual": e.residual,
    }
    _emit(_record(fields, args.format), args, f"exponent.{args.format}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    pts = solvers.extension_factor_sweep(args.eps)
    rows = [asdict(p) for p in pts]
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("eps", "p", "alpha", "c_eps", "running_sup"))
        for r in rows:
            w.writerow(repr(v) for v in r.values())
        text = buf.getvalue()
    _emit(text, args, f"sweep.{args.format}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output directory")
    common.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    common.add_argument("--grid", type=int, default=10_000, help="eta grid size for the oracle sup")
    common.add_argument("--raw", action="store_true", help="full precision instead of table rounding")
    common.add_argument("--alpha-driven", action="store_true",
                        help="drive table rows by the printed alpha column")

    parser = argparse.ArgumentParser(prog="grnorms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="norms and extremal points per p")
    t.add_argument("--p", type=float, nargs="*", default=None)
    t.add_argument("--alpha", type=float, nargs="*", default=None)
    t.set_defaults(func=cmd_table)

    sub.add_parser("figures", parents=[common], help="write plot-data series").set_defaults(func=cmd_figures)
    sub.add_parser("verify", parents=[common], help="oracle cross-checks").set_defaults(func=cmd_verify)
    sub.add_parser("bmo", parents=[common], help="BMO constant C0").set_defaults(func=cmd_bmo)

    n = sub.add_parser("norm", parents=[common], help="real-line norm of |x|^alpha")
    n.add_argument("--alpha", type=float, required=True)
    n.set_defaults(func=cmd_norm)

    e = sub.add_parser("exponent", parents=[common], help="limiting summability exponent")
    e.add_argument("--eps", type=float, required=True)
    e.set_defaults(func=cmd_exponent)

    s = sub.add_parser("sweep", parents=[common], help="C_eps over a list of eps")
    s.add_argument("--eps", type=float, nargs="+", required=True)
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())

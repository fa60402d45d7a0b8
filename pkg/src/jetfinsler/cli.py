"""Command-line interface: the verification suite and point evaluation.

Exit codes: 0 all checks pass / evaluation succeeded, 1 verification
failure, 2 usage or configuration error, 3 numeric degeneracy.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import (DegeneracyError, DomainError, MetricFileError, OracleError,
                     ParameterError, SamplingError, SingularMetricError, UnknownTensorError)
from .jet_core import JetPoint
from .verify import (VerifyConfig, eval_tensor, parse_h, parse_metric,
                     report_to_json, run_suite, _fmt)

EXIT_PASS = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

_USAGE_ERRORS = (ParameterError, MetricFileError, UnknownTensorError, DomainError)
_DEGENERACY_ERRORS = (DegeneracyError, OracleError, SamplingError, SingularMetricError)


def _parse_tol(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise ParameterError(f"bad tolerance override {item!r}, expected NAME=VALUE")
        try:
            out[name] = float(value)
        except ValueError as exc:
            raise ParameterError(f"bad tolerance value in {item!r}") from exc
    return out


def parse_point(spec: str) -> JetPoint:
    """Parse "t=T,x=a,b,c,d,y=e,f,g,h" into a JetPoint."""
    if not spec.startswith("t="):
        raise ParameterError(f"point spec must start with 't=', got {spec!r}")
    t_part, sep, rest = spec[2:].partition(",x=")
    if not sep:
        raise ParameterError(f"point spec is missing ',x=' in {spec!r}")
    x_part, sep, y_part = rest.partition(",y=")
    if not sep:
        raise ParameterError(f"point spec is missing ',y=' in {spec!r}")
    try:
        t = float(t_part)
        x = [float(v) for v in x_part.split(",")]
        y = [float(v) for v in y_part.split(",")]
    except ValueError as exc:
        raise ParameterError(f"bad coordinate in point spec: {exc}") from exc
    if len(x) != 4 or len(y) != 4:
        raise ParameterError("x and y need exactly four components each")
    return JetPoint(t, np.array(x), np.array(y))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jetfinsler",
                                     description="verify and evaluate jet Finsler geometry tensors")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run the identity-verification suite")
    pv.add_argument("--metric", default="chernov", help="chernov | f2 | custom:PATH")
    pv.add_argument("--h", default="exp:1.0", dest="h_spec",
                    help="const:C | exp:A | poly:C0,C1,...")
    pv.add_argument("--samples", type=int, default=100)
    pv.add_argument("--seed", type=int, default=42)
    pv.add_argument("--tol", action="append", metavar="NAME=VAL",
                    help="tolerance override, repeatable")
    pv.add_argument("--k", type=float, default=1.0, help="Einstein constant")
    pv.add_argument("--out", help="write the JSON report to this path")

    pe = sub.add_parser("eval", help="evaluate one tensor at a point")
    pe.add_argument("--tensor", required=True)
    pe.add_argument("--point", required=True, metavar="t=T,x=a,b,c,d,y=e,f,g,h")
    pe.add_argument("--metric", default="chernov")
    pe.add_argument("--h", default="const:1.0", dest="h_spec")
    pe.add_argument("--k", type=float, default=1.0)
    pe.add_argument("--format", default="json", choices=["json"])
    return parser


def _cmd_verify(args) -> int:
    cfg = VerifyConfig(metric_spec=args.metric, h_spec=args.h_spec, samples=args.samples,
                       seed=args.seed, tol=_parse_tol(args.tol), K=args.k)
    report = run_suite(cfg)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] {c.name:<28} max residual {c.max_residual:.3e}  tol {c.tolerance:.1e}  ({c.samples} pts)")
    print(f"overall: {'PASS' if report.overall_pass else 'FAIL'} "
          f"({sum(c.passed for c in report.checks)}/{len(report.checks)} checks)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report_to_json(report))
        print(f"report written to {args.out}")
    return EXIT_PASS if report.overall_pass else EXIT_VERIFY_FAIL


def _cmd_eval(args) -> int:
    metric = parse_metric(args.metric)
    h = parse_h(args.h_spec)
    point = parse_point(args.point)
    payload = eval_tensor(args.tensor, point, metric, h, args.k)
    print(_fmt(payload))
    return EXIT_PASS


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_eval(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DEGENERACY_ERRORS as exc:
        print(f"degeneracy error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())

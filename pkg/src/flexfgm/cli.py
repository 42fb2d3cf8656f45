"""Command-line front end.

Exit codes: 0 success, 1 invalid parameters (or ``validate`` outside Omega),
2 certification failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

import numpy as np

from . import certifier as _cert
from .core import CopulaParams, cdf, conditional_cdf, pdf
from .dependence import (
    rho_closed,
    rho_quadrature,
    sample_kendall,
    sample_spearman,
    tau_closed,
    tau_quadrature,
)
from .errors import CopulaError
from .region import RegionLabel, density_admissible_interval, in_omega, omega_a_interval
from .sampling import SamplerConfig, sample_pairs

EX_OK, EX_INVALID, EX_CERT, EX_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/4" and "-1e-3" through as values rather than options
        self._negative_number_matcher = re.compile(r"^-(\d+(/\d+)?|\d*\.?\d+([eE][-+]?\d+)?)$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def real(text: str) -> float:
    """Parse a decimal or simple rational such as ``-1/4``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return n


def _num(x) -> str:
    return f"{x:.17g}" if isinstance(x, float) else str(x)


def _render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]) if rows else [])
    for row in rows:
        writer.writerow([_num(x) for x in row.values()])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_rows(args, rows, header=None) -> None:
    if args.format == "csv" and not rows and header:
        _emit(",".join(header) + "\n", args.out)
    else:
        _emit(_render(rows, args.format), args.out)


def _ab(parser):
    parser.add_argument("--a", type=real, required=True)
    parser.add_argument("--b", type=real, required=True)


def _output(parser, default=None):
    parser.add_argument("--format", choices=["csv", "json"], default=default)
    parser.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flexfgm", description="Modified FGM copula toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="classify (a, b) against Omega")
    _ab(p)
    p.add_argument("--exact", action="store_true", help="also print the exact density interval")
    _output(p)

    p = sub.add_parser("eval", help="evaluate the copula at (u, v)")
    _ab(p)
    p.add_argument("--u", type=real, required=True)
    p.add_argument("--v", type=real, required=True)
    p.add_argument("--density", action="store_true")
    p.add_argument("--conditional", action="store_true")
    _output(p)

    p = sub.add_parser("sample", help="draw pairs by conditional inversion")
    _ab(p)
    p.add_argument("-n", type=_count, required=True)
    p.add_argument("--seed", type=_count, required=True)
    p.add_argument("--workers", type=_count, default=1)
    _output(p, default="csv")

    p = sub.add_parser("dep", help="Spearman's rho and Kendall's tau")
    _ab(p)
    method = p.add_mutually_exclusive_group()
    method.add_argument("--closed", action="store_true")
    method.add_argument("--quad", action="store_true")
    method.add_argument("--mc", type=_count, metavar="N")
    p.add_argument("--seed", type=_count)
    _output(p)

    p = sub.add_parser("scan", help="grid scan of region membership and dependence")
    for name in ("a-min", "a-max", "b-min", "b-max"):
        p.add_argument(f"--{name}", type=real, required=True)
    p.add_argument("--steps", type=_count, required=True)
    _output(p, default="csv")

    p = sub.add_parser("certify", help="numerically check the copula axioms")
    _ab(p)
    p.add_argument("--grid", type=_count, default=_cert.DEFAULT_GRID)
    p.add_argument("--tol", type=real, default=_cert.DEFAULT_TOL)
    _output(p)
    return parser


def _validate(args) -> int:
    label = in_omega(args.a, args.b)
    branch, interval = omega_a_interval(args.b)
    exact = density_admissible_interval(args.b) if args.exact else None
    if args.format:
        row = {"a": args.a, "b": args.b, "in_omega": str(label),
               "omega_a_min": interval.a_min, "omega_a_max": interval.a_max}
        if exact:
            row.update(exact_a_min=exact.a_min, exact_a_max=exact.a_max)
        _emit(_render([row], args.format), args.out)
    else:
        lines = [f"{label} {interval}"]
        if exact:
            lines.append(f"exact {exact}")
        _emit("\n".join(lines) + "\n", args.out)
    return EX_INVALID if label is RegionLabel.Outside else EX_OK


def _eval(args) -> int:
    params = CopulaParams(args.a, args.b)
    row = {"cdf": cdf(params, args.u, args.v)}
    if args.density:
        row["pdf"] = pdf(params, args.u, args.v)
    if args.conditional:
        row["conditional_cdf"] = conditional_cdf(params, args.u, args.v)
    if args.format:
        _emit(_render([{"a": args.a, "b": args.b, "u": args.u, "v": args.v, **row}], args.format), args.out)
    else:
        _emit(" ".join(f"{k}={v!r}" for k, v in row.items()) + "\n", args.out)
    return EX_OK


def _sample(args) -> int:
    cfg = SamplerConfig(CopulaParams(args.a, args.b), args.seed, args.n)
    s = sample_pairs(cfg, workers=max(1, args.workers))
    if args.format == "csv":
        _emit(s.to_csv(), args.out)
    else:
        _emit(json.dumps([{"u": x, "v": y} for x, y in s]) + "\n", args.out)
    return EX_OK


def _dep(args) -> int:
    params = CopulaParams(args.a, args.b)
    if args.quad:
        method = "quad"
        rho = rho_quadrature(lambda u, v: cdf(params, u, v))
        tau = tau_quadrature(lambda u, v: cdf(params, u, v), lambda u, v: pdf(params, u, v))
    elif args.mc is not None:
        if args.seed is None:
            raise UsageError("--mc requires --seed")
        if args.mc < 2:
            raise UsageError("--mc needs at least 2 draws")
        method = "mc"
        s = sample_pairs(SamplerConfig(params, args.seed, args.mc))
        rho, tau = sample_spearman(s), sample_kendall(s)
    else:
        method = "closed"
        rho, tau = rho_closed(args.a, args.b), tau_closed(args.a, args.b)
    if args.format:
        _emit(_render([{"a": args.a, "b": args.b, "method": method, "rho": rho, "tau": tau}], args.format), args.out)
    else:
        _emit(f"rho={rho!r} tau={tau!r}\n", args.out)
    return EX_OK


def _scan(args) -> int:
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    if args.a_min > args.a_max or args.b_min > args.b_max:
        raise UsageError("empty scan range")
    rows = []
    for a in np.linspace(args.a_min, args.a_max, args.steps):
        for b in np.linspace(args.b_min, args.b_max, args.steps):
            a_, b_ = float(a), float(b)
            rows.append({"a": a_, "b": b_, "in_omega": str(in_omega(a_, b_)),
                         "rho": rho_closed(a_, b_), "tau": tau_closed(a_, b_)})
    _emit_rows(args, rows)
    return EX_OK


def _certify(args) -> int:
    if args.grid < 3:
        raise UsageError("--grid must be at least 3")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    report = _cert.certify_params(CopulaParams(args.a, args.b), grid_n=args.grid, tol=args.tol)
    if args.format:
        rows = [{"kind": str(v.kind), "location": " ".join(_num(x) for x in v.location),
                 "magnitude": v.magnitude, "count": v.count} for v in report.violations]
        _emit_rows(args, rows, header=["kind", "location", "magnitude", "count"])
    else:
        status = "passed" if report.passed else "FAILED"
        lines = [f"{status} grid={report.grid_n} tol={report.tol!r}"]
        for v in report.violations:
            loc = ", ".join(f"{x:.6g}" for x in v.location)
            lines.append(f"{v.kind} magnitude={v.magnitude:.6g} at ({loc}) count={v.count}")
        _emit("\n".join(lines) + "\n", args.out)
    return EX_OK if report.passed else EX_CERT


COMMANDS = {
    "validate": _validate,
    "eval": _eval,
    "sample": _sample,
    "dep": _dep,
    "scan": _scan,
    "certify": _certify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"flexfgm: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except CopulaError as exc:
        print(f"flexfgm: invalid parameters: {exc}", file=sys.stderr)
        return EX_INVALID


if __name__ == "__main__":
    sys.exit(main())

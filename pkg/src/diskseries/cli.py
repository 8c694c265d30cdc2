"""Command-line interface.

Exit codes partition outcomes: 0 success, 2 input error, 3 domain error,
4 inequality violation, 5 monotonicity failure.  Every command is
deterministic given its inputs and seed; rerunning reproduces output files
byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import fileio
from .families import FunctionFamily, extract_subsequence, function_bound_from_coefficients, normality_certificate
from .means import (
    HOLOMORPHIC_REL_TOL,
    PROPOSITION_REL_TOL,
    ConvexGauge,
    MeanTable,
    holomorphic_subconvex_scan,
    mean_scan,
    sup_mean,
)
from .operators import von_neumann_sweep
from .parseval import circle_inner_product, parseval_sum
from .poisson import (
    coefficients_from_boundary,
    coefficients_at_radius,
    extension_resolution_flag,
    harmonic_projection,
    poisson_extend_many,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INEQUALITY = 4
EXIT_MONOTONE = 5


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str) -> CommandError:
    return CommandError(code, message)


def _parse_radii(text: str) -> list[float]:
    try:
        radii = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise _fail(EXIT_INPUT, f"bad --radii value: {exc}") from exc
    if not radii:
        raise _fail(EXIT_INPUT, "--radii must list at least one radius")
    return radii


def _parse_gauge(spec: str) -> ConvexGauge:
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise _fail(EXIT_INPUT, f"bad --gauge {spec!r}: expected power:P, exp:L, or file:PATH")
    try:
        if kind == "power":
            return ConvexGauge.power(float(arg))
        if kind == "exp":
            return ConvexGauge.exp_scaled(float(arg))
        if kind == "file":
            import json

            obj = json.loads(Path(arg).read_text(encoding="utf-8"))
            return ConvexGauge.tabulated(obj["knots"], obj["values"])
    except CommandError:
        raise
    except FileNotFoundError as exc:
        raise _fail(EXIT_INPUT, f"gauge file not found: {arg}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise _fail(EXIT_INPUT, f"bad --gauge {spec!r}: {exc}") from exc
    raise _fail(EXIT_INPUT, f"unknown gauge kind {kind!r}")


def _read(reader, path):
    try:
        return reader(path)
    except FileNotFoundError as exc:
        raise _fail(EXIT_INPUT, f"input file not found: {path}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc


def cmd_extend(args) -> int:
    samples = _read(fileio.read_boundary, args.in_path)
    points = _read(fileio.read_points, args.points)
    for row, zeta in enumerate(points, start=2):
        if abs(zeta) >= 1.0:
            raise _fail(EXIT_DOMAIN, f"{args.points}: row {row}: |zeta| = {abs(zeta)!r} >= 1")
    values = poisson_extend_many(samples, np.array(points, dtype=np.complex128))
    lines = ["re,im,h_re,h_im,resolution_flag"]
    for zeta, h in zip(points, values):
        flag = extension_resolution_flag(samples.m, zeta)
        lines.append(
            f"{fileio.fmt17(zeta.real)},{fileio.fmt17(zeta.imag)},"
            f"{fileio.fmt17(h.real)},{fileio.fmt17(h.imag)},{'true' if flag else 'false'}"
        )
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_coeffs(args) -> int:
    samples = _read(fileio.read_boundary, args.in_path)
    try:
        if args.radius is None:
            coeffs = coefficients_from_boundary(samples, args.nmax)
        else:
            recovery = coefficients_at_radius(samples, args.radius, args.nmax)
            if recovery.ill_conditioned:
                print(
                    f"warning: r^n_max = {args.radius ** args.nmax!r} < 1e-12; "
                    "recovered coefficients are ill-conditioned",
                    file=sys.stderr,
                )
            coeffs = recovery.coefficients
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    fileio.write_coefficients(coeffs, args.out)
    return EXIT_OK


def cmd_project(args) -> int:
    poly = _read(fileio.read_mixed_polynomial, args.in_path)
    fileio.write_coefficients(harmonic_projection(poly), args.out)
    return EXIT_OK


def cmd_means(args) -> int:
    coeffs = _read(fileio.read_coefficients, args.in_path)
    gauge = _parse_gauge(args.gauge)
    radii = _parse_radii(args.radii)
    try:
        if gauge.holomorphic_only:
            table = holomorphic_subconvex_scan(coeffs, gauge.exponent, radii, args.grid)
            rel_tol = HOLOMORPHIC_REL_TOL
        else:
            table = mean_scan(coeffs, gauge, radii, args.grid)
            rel_tol = PROPOSITION_REL_TOL
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    monotone = (
        table.is_nondecreasing(rel_tol)
        if args.mono_tol is None
        else all(b >= a - args.mono_tol for a, b in zip(table.means, table.means[1:]))
    )
    fileio.write_mean_table(table, args.out, monotone)
    return EXIT_OK if monotone else EXIT_MONOTONE


def cmd_supmeans(args) -> int:
    coeffs = _read(fileio.read_coefficients, args.in_path)
    radii = _parse_radii(args.radii)
    try:
        values = [sup_mean(coeffs, r, args.grid) for r in radii]
        table = MeanTable(tuple(radii), tuple(values), None, args.grid)
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    monotone = (
        table.is_nondecreasing(PROPOSITION_REL_TOL)
        if args.mono_tol is None
        else all(b >= a - args.mono_tol for a, b in zip(table.means, table.means[1:]))
    )
    fileio.write_mean_table(table, args.out, monotone)
    return EXIT_OK if monotone else EXIT_MONOTONE


def cmd_vn_sweep(args) -> int:
    trials = von_neumann_sweep(
        args.seed, args.trials, args.dim, args.degree, inject_norm=args.inject_norm
    )
    lines = ["trial,lhs,rhs,margin,holds"]
    for t in trials:
        r = t.result
        lines.append(
            f"{t.trial},{fileio.fmt17(r.lhs)},{fileio.fmt17(r.rhs)},"
            f"{fileio.fmt17(r.margin)},{'true' if r.holds else 'false'}"
        )
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    failing = [t for t in trials if not t.result.holds]
    if failing:
        worst = failing[0]
        dump = Path(str(args.out) + ".violation.json")
        body = (
            '{"trial": %d, "lhs": %s, "rhs": %s, '
            '"matrix": {"dim": %d, "entries": [%s]}, "polynomial": {"coeffs": [%s]}}'
            % (
                worst.trial,
                fileio.fmt17(worst.result.lhs),
                fileio.fmt17(worst.result.rhs),
                worst.matrix.shape[0],
                ",".join(
                    f"[{fileio.fmt17(v.real)},{fileio.fmt17(v.imag)}]"
                    for v in worst.matrix.ravel()
                ),
                ",".join(
                    f"[{fileio.fmt17(v.real)},{fileio.fmt17(v.imag)}]"
                    for v in worst.polynomial.coefficients
                ),
            )
        )
        dump.write_text(body + "\n", encoding="utf-8")
        print(f"inequality violated in trial {worst.trial}; details in {dump}", file=sys.stderr)
        return EXIT_INEQUALITY
    return EXIT_OK


def cmd_parseval(args) -> int:
    samples = _read(fileio.read_boundary, args.in_path)
    try:
        coeffs = coefficients_from_boundary(samples, args.nmax)
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    inner = circle_inner_product(samples, samples).real
    total = parseval_sum(coeffs, 1.0)
    lines = [
        "quantity,value",
        f"inner_product,{fileio.fmt17(inner)}",
        f"coefficient_sum,{fileio.fmt17(total)}",
        f"abs_difference,{fileio.fmt17(abs(inner - total))}",
    ]
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_normality(args) -> int:
    members = _read(fileio.read_family, args.in_path)
    radii = _parse_radii(args.radii)
    family = FunctionFamily(tuple(members))
    try:
        cert = normality_certificate(family, radii, args.grid)
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    lines = ["r,m_bound,c_bound,domination_bound"]
    violated = False
    for i, (r, mb, cb) in enumerate(zip(cert.radii, cert.m_bounds, cert.c_bounds)):
        if cb > mb + 1e-12:
            violated = True
        if i + 1 < len(cert.radii):
            dom = function_bound_from_coefficients(family, r, cert.radii[i + 1])
            if mb > dom + 1e-10:
                violated = True
            dom_text = fileio.fmt17(dom)
        else:
            dom_text = ""
        lines.append(f"{fileio.fmt17(r)},{fileio.fmt17(mb)},{fileio.fmt17(cb)},{dom_text}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if violated:
        print("normal-family bound violated; see table", file=sys.stderr)
        return EXIT_INEQUALITY
    return EXIT_OK


def cmd_extract(args) -> int:
    members = _read(fileio.read_family, args.in_path)
    try:
        result = extract_subsequence(members, args.tol)
    except ValueError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    fileio.write_extraction(result, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskseries",
        description="Harmonic and holomorphic functions on the unit disk "
        "via truncated two-sided power series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("extend", cmd_extend, "Poisson-extend boundary samples to interior points")
    p.add_argument("--in", dest="in_path", required=True, help="boundary CSV (k,theta,re,im)")
    p.add_argument("--points", required=True, help="target points CSV (re,im)")
    p.add_argument("--out", required=True, help="output CSV")

    p = add("coeffs", cmd_coeffs, "extract series coefficients from boundary samples")
    p.add_argument("--in", dest="in_path", required=True, help="boundary CSV")
    p.add_argument("--nmax", type=int, required=True, help="largest |n| to recover")
    p.add_argument("--radius", type=float, default=None,
                   help="treat samples as taken at this radius and divide out r^|n|")
    p.add_argument("--out", required=True, help="output coefficient JSON")

    p = add("project", cmd_project, "harmonic projection of a polynomial in z and conj(z)")
    p.add_argument("--in", dest="in_path", required=True, help="mixed polynomial JSON")
    p.add_argument("--out", required=True, help="output coefficient JSON")

    p = add("means", cmd_means, "integral means across radii with a gauge")
    p.add_argument("--in", dest="in_path", required=True, help="coefficient JSON")
    p.add_argument("--gauge", required=True, help="power:P | exp:L | file:PATH")
    p.add_argument("--radii", required=True, help="comma-separated radii in (0,1)")
    p.add_argument("--grid", type=int, default=1024, help="circle grid size (default 1024)")
    p.add_argument("--mono-tol", type=float, default=None,
                   help="override the monotonicity tolerance (absolute)")
    p.add_argument("--out", required=True, help="output CSV")

    p = add("supmeans", cmd_supmeans, "sup of |h| on circles of the given radii")
    p.add_argument("--in", dest="in_path", required=True, help="coefficient JSON")
    p.add_argument("--radii", required=True, help="comma-separated radii in (0,1)")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--mono-tol", type=float, default=None,
                   help="override the monotonicity tolerance (absolute)")
    p.add_argument("--out", required=True, help="output CSV")

    p = add("vn-sweep", cmd_vn_sweep, "randomized polynomial-contraction inequality sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", type=int, default=6, help="max matrix dimension")
    p.add_argument("--degree", type=int, default=8, help="max polynomial degree")
    p.add_argument("--inject-norm", type=float, default=None, help=argparse.SUPPRESS)
    p.add_argument("--out", required=True, help="output CSV")

    p = add("parseval", cmd_parseval, "discrete inner product vs coefficient sum")
    p.add_argument("--in", dest="in_path", required=True, help="boundary CSV")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV")

    p = add("normality", cmd_normality, "normal-family bound witnesses for a family")
    p.add_argument("--in", dest="in_path", required=True, help="family JSON")
    p.add_argument("--radii", required=True, help="comma-separated radii in (0,1)")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--out", required=True, help="output CSV")

    p = add("extract", cmd_extract, "clustered subsequence extraction from a family")
    p.add_argument("--in", dest="in_path", required=True, help="family JSON")
    p.add_argument("--tol", type=float, required=True, help="cluster box side")
    p.add_argument("--out", required=True, help="output JSON")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main_entry():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

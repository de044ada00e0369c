"""Command-line front end.

Subcommands mirror the library pipelines and emit machine-readable tables
(CSV by default, JSON behind ``--format json``):

* ``moments`` - certified grid moments, one row per degree.
* ``coeffs``  - coefficient polynomials per route, plus pairwise route
  deviations under ``--route all``.
* ``interp``  - grid interpolation of a sample file, with node residuals.
* ``verify``  - the identity suite; exit status 1 if anything fails.

Output is deterministic: identical configuration gives byte-identical
tables.  Figures are rendered only when ``--plot-dir`` is given and never
change the tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath

from . import cardinal, grid, kernel as kernels, oracle, spectral
from . import precision as prec
from .errors import CkiError, DegreeCapError, TailNotCertifiableError, UnsupportedRouteError
from .poly import Polynomial

ROUTES = ("triangular", "q-he", "q-ne", "spectral", "toeplitz")
IDENTITIES = (
    "poly-convolution",
    "interp-recursion",
    "error-recursion",
    "triangular",
    "integer-interpolation",
    "poisson",
    "wiener",
)


def _fmt(value) -> str:
    """Shortest-roundtrip text for table cells."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 33, strip_zeros=True)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, (float, mpmath.mpf)):
        return float(value)
    return value


def _emit(rows, fieldnames, args) -> None:
    if args.format == "json":
        payload = [
            {name: _json_value(row[name]) for name in fieldnames} for row in rows
        ]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_fmt(row[name]) for name in fieldnames])
        text = buffer.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _resolve_precision(args) -> None:
    mode = args.precision or os.environ.get("CKI_PRECISION") or prec.STANDARD
    try:
        prec.set_precision(mode)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _require_gaussian(args) -> kernels.Kernel:
    if args.kernel != "gaussian":
        print(f"error: kernel {args.kernel!r} is not supported by this command",
              file=sys.stderr)
        raise SystemExit(2)
    return kernels.gaussian()


# ---------------------------------------------------------------- moments


def cmd_moments(args) -> int:
    kern = _require_gaussian(args)
    rows = []
    try:
        table = kernels.MomentTable.build(kern, args.max_degree, args.tol)
    except TailNotCertifiableError as exc:
        failing = None
        for k in range(args.max_degree + 1):
            try:
                kernels.truncation_radius(kern, k, args.tol)
            except TailNotCertifiableError:
                failing = k
                break
        print(f"error: moment certification failed at k={failing}: {exc}",
              file=sys.stderr)
        return 2
    for k in range(args.max_degree + 1):
        rows.append({
            "k": k,
            "value": table.values[k],
            "radius": table.radii[k],
            "tail": table.tails[k],
        })
    _emit(rows, ["k", "value", "radius", "tail"], args)
    if args.plot_dir:
        from . import plots
        plots.plot_moments(rows, args.plot_dir)
    return 0


# ----------------------------------------------------------------- coeffs


def _route_polynomials(route, moments, max_degree):
    if route == "triangular":
        return cardinal.build_coefficients_triangular(moments, max_degree).polynomials
    if route == "q-he":
        return cardinal.build_coefficients_q(moments, max_degree, base="grid").polynomials
    if route == "q-ne":
        return cardinal.build_coefficients_q(moments, max_degree, base="continuous").polynomials
    return None


def _route_sequences(route, kern, moments, max_degree, window):
    polys = _route_polynomials(route, moments, max_degree)
    if polys is not None:
        return [
            {j: poly(prec.real(j)) for j in window} for poly in polys
        ]
    if route == "toeplitz":
        values = oracle.finite_section_coefficients(
            kern, 60, max_degree, list(window))
        return [values[k] for k in range(max_degree + 1)]
    if route == "spectral":
        symbol = spectral.periodize(kern, 256)
        recip = spectral.reciprocal_coefficients(symbol, 32)
        out = []
        data_window = range(-40, 41)
        for k in range(max_degree + 1):
            data = [prec.real(j) ** k for j in data_window]
            result = spectral.spectral_interpolate(
                symbol, data, -40, reciprocal=recip)
            out.append({j: result.coefficient(j) for j in window})
        return out
    raise UnsupportedRouteError(f"unknown route {route!r}")


def cmd_coeffs(args) -> int:
    kern = _require_gaussian(args)
    moments = kernels.MomentTable.build(kern, max(args.max_degree, 4), args.tol)
    routes = ROUTES if args.route == "all" else (args.route,)
    window = list(range(-5, 6))
    rows = []
    sequences = {}
    try:
        for route in routes:
            polys = _route_polynomials(route, moments, args.max_degree)
            if polys is not None:
                for k, poly in enumerate(polys):
                    for i, c in enumerate(poly.coefficients):
                        rows.append({"kind": "coefficient", "route": route,
                                     "k": k, "i": i, "value": c})
            seq = _route_sequences(route, kern, moments, args.max_degree, window)
            sequences[route] = seq
            if polys is None:
                for k, mapping in enumerate(seq):
                    for j in window:
                        rows.append({"kind": "value", "route": route,
                                     "k": k, "i": j, "value": mapping[j]})
    except UnsupportedRouteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.route == "all":
        names = list(sequences)
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                worst = 0.0
                for k in range(args.max_degree + 1):
                    for j in window:
                        diff = abs(float(sequences[names[a]][k][j]
                                         - sequences[names[b]][k][j]))
                        worst = max(worst, diff)
                rows.append({"kind": "deviation",
                             "route": f"{names[a]}|{names[b]}",
                             "k": args.max_degree, "i": "", "value": worst})
    _emit(rows, ["kind", "route", "k", "i", "value"], args)
    if args.plot_dir:
        from . import plots
        shown = {}
        for route in routes:
            polys = _route_polynomials(route, moments, args.max_degree)
            if polys is not None:
                shown[route] = polys
        if shown:
            plots.plot_coefficients(shown, args.plot_dir)
    return 0


# ----------------------------------------------------------------- interp


def _read_samples(path):
    """Parse the two-column sample file; returns (n, values).

    Accepts an optional header row; rejects rows without exactly two
    fields, naming the offending physical row.
    """
    values = {}
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        for number, fields in enumerate(reader, start=1):
            if not fields or (len(fields) == 1 and not fields[0].strip()):
                continue
            if len(fields) != 2:
                raise ValueError(f"row {number}: expected 2 fields")
            first, second = fields[0].strip(), fields[1].strip()
            if number == 1:
                try:
                    int(first)
                except ValueError:
                    continue  # header row
            try:
                index = int(first)
                value = float(second)
            except ValueError:
                raise ValueError(
                    f"row {number}: could not parse '{first},{second}' "
                    f"as index,value"
                )
            values[index] = value
    if not values:
        raise ValueError("row 1: expected 2 fields")
    n = max(values)
    missing = [i for i in range(n + 1) if i not in values]
    if missing:
        raise ValueError(f"missing sample indices: {missing}")
    return n, [values[i] for i in range(n + 1)]


def cmd_interp(args) -> int:
    kern = _require_gaussian(args)
    try:
        n, sample_values = _read_samples(args.samples)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.n is not None and args.n != n:
        print(f"error: file holds n={n} but --n {args.n} was given",
              file=sys.stderr)
        return 2
    if n > grid.DEGREE_CAP:
        print(f"error: grid degree n={n} exceeds the cap {grid.DEGREE_CAP}",
              file=sys.stderr)
        return 3
    moments = kernels.MomentTable.build(kern, n, args.tol)
    coeffs = cardinal.build_coefficients_triangular(moments, n)
    samples = grid.GridSamples(n, sample_values)
    try:
        interp = grid.build_grid_interpolant(samples, coeffs, args.tol)
    except DegreeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    rows = []
    node_rows = []
    for i in range(n + 1):
        x = prec.real(i) / n
        result = grid.evaluate_grid(interp, x)
        node_rows.append({
            "kind": "node", "x": x, "value": result.value,
            "error": abs(result.value - samples.values[i]),
        })
    eval_rows = []
    points = max(args.points, 0)
    for i in range(points):
        x = prec.real(i) / max(points - 1, 1)
        result = grid.evaluate_grid(interp, x)
        eval_rows.append({
            "kind": "eval", "x": x, "value": result.value,
            "error": result.budget,
        })
    rows = node_rows + eval_rows
    _emit(rows, ["kind", "x", "value", "error"], args)
    if args.plot_dir:
        from . import plots
        plots.plot_interp(eval_rows or node_rows, node_rows, args.plot_dir)
    return 0


# ----------------------------------------------------------------- verify


def _verify_rows(args, kern):
    max_degree = args.max_degree
    moments = kernels.MomentTable.build(kern, max(max_degree, 4), args.tol)
    coeffs = cardinal.build_coefficients_triangular(moments, max_degree)
    rows = []

    def record(identity, cases, deviation, tolerance):
        rows.append({
            "identity": identity,
            "cases": cases,
            "max_deviation": float(deviation),
            "tolerance": tolerance,
            "status": "pass" if float(deviation) <= tolerance else "fail",
        })

    wanted = set(IDENTITIES) if args.identity is None else {args.identity}

    if "poly-convolution" in wanted:
        worst, count = 0.0, 0
        for k in range(min(8, max_degree) + 1):
            for ell in range(-4, 5):
                sides = cardinal.verify_poly_convolution(moments, k, ell)
                worst = max(worst, abs(float(sides.lhs - sides.rhs)))
                count += 1
        record("poly-convolution", count, worst, 1e-10)

    if "interp-recursion" in wanted or "error-recursion" in wanted:
        xs = [-3 + 6 * i / 24 for i in range(25)]
        if "interp-recursion" in wanted:
            worst, count = 0.0, 0
            for k in range(min(6, max_degree) + 1):
                for x in xs:
                    sides = cardinal.verify_interp_recursion(coeffs, k, x)
                    worst = max(worst, abs(float(sides.lhs - sides.rhs)))
                    count += 1
            record("interp-recursion", count, worst, 1e-8)
        if "error-recursion" in wanted:
            worst, count = 0.0, 0
            for k in range(min(6, max_degree) + 1):
                for x in xs:
                    sides = cardinal.verify_error_recursion(coeffs, k, x)
                    worst = max(worst, abs(float(sides.lhs - sides.rhs)))
                    count += 1
            record("error-recursion", count, worst, 1e-8)

    if "triangular" in wanted:
        from math import comb
        worst = 0.0
        scale = max(float(abs(m)) for m in moments.values)
        for k in range(max_degree + 1):
            acc = Polynomial([0] * k + [1])
            for i in range(k + 1):
                acc = acc - comb(k, i) * moments[k - i] * coeffs.polynomial(i)
            worst = max(worst, max(
                (abs(float(c)) for c in acc.coefficients), default=0.0))
        record("triangular", max_degree + 1, worst, 1e-12 * scale)

    if "integer-interpolation" in wanted:
        worst, count = 0.0, 0
        for k in range(max_degree + 1):
            interp = cardinal.interpolate_monomial(coeffs, k)
            for ell in range(-5, 6):
                got = cardinal.evaluate(interp, ell).value
                err = abs(float(got - prec.real(ell) ** k))
                err /= max(1.0, float(abs(ell)) ** k)
                worst = max(worst, err)
                count += 1
        record("integer-interpolation", count, worst, 1e-9)

    if "poisson" in wanted:
        worst = 0.0
        points = max(args.points, 1)
        for i in range(points):
            sides = spectral.verify_poisson(kern, i / points)
            worst = max(worst, abs(float(sides.lhs - sides.rhs)))
        record("poisson", points, worst, 1e-12)

    if "wiener" in wanted:
        symbol = spectral.periodize(kern, 256)
        result = spectral.check_wiener(symbol)
        rows.append({
            "identity": "wiener",
            "cases": symbol.m,
            "max_deviation": 0.0 if result.holds else float(result.min_modulus),
            "tolerance": 0.0,
            "status": "pass" if result.holds else "fail",
        })
    return rows


def _synthetic_zero_rows(args):
    base = spectral.periodize(kernels.gaussian(), 256)
    samples = list(base.samples)
    samples[len(samples) // 2] = prec.real(0)
    symbol = spectral.PeriodizedSymbol.from_samples(
        samples, kernel=base.kernel, tail_bound=base.tail_bound)
    result = spectral.check_wiener(symbol)
    return [{
        "identity": "wiener",
        "cases": symbol.m,
        "max_deviation": float(result.min_modulus),
        "tolerance": 0.0,
        "status": "pass" if result.holds else "fail",
    }]


def cmd_verify(args) -> int:
    if args.kernel == "synthetic-zero":
        rows = _synthetic_zero_rows(args)
    else:
        kern = _require_gaussian(args)
        rows = _verify_rows(args, kern)
    _emit(rows, ["identity", "cases", "max_deviation", "tolerance", "status"], args)
    if args.plot_dir:
        from . import plots
        plots.plot_verify(rows, args.plot_dir)
    return 0 if all(r["status"] == "pass" for r in rows) else 1


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cki",
        description="cardinal interpolation toolkit (Gaussian kernel)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kernel_choices=("gaussian",)):
        p.add_argument("--kernel", choices=kernel_choices, default="gaussian")
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--precision", choices=(prec.STANDARD, prec.EXTENDED),
                       default=None,
                       help="working precision (default: CKI_PRECISION or standard)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--plot-dir", default=None,
                       help="also render figures into this directory")

    p = sub.add_parser("moments", help="certified grid moments")
    common(p)
    p.add_argument("--max-degree", type=int, default=8)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("coeffs", help="coefficient polynomials per route")
    common(p)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--route", choices=ROUTES + ("all",), default="triangular")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("interp", help="grid interpolation of a sample file")
    common(p)
    p.add_argument("samples", help="CSV file with rows i,value for i = 0..n")
    p.add_argument("--n", type=int, default=None,
                   help="expected grid degree (validated against the file)")
    p.add_argument("--points", type=int, default=9,
                   help="evaluation count on an equispaced grid in [0,1]")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("verify", help="run the identity suite")
    common(p, kernel_choices=("gaussian", "synthetic-zero"))
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--points", type=int, default=64)
    p.add_argument("--identity", choices=IDENTITIES, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _resolve_precision(args)
    try:
        return args.func(args)
    except TailNotCertifiableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CkiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

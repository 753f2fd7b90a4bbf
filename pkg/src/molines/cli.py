"""Command-line front end.

Every subcommand prints a short plain-text summary on stdout and, with
``--out``, writes its data as CSV.  Exit status is 0 on success,
:data:`EXIT_INPUT` for invalid input and :data:`EXIT_NUMERIC` for numerical
failures.
"""

import argparse
import sys

import numpy as np

from . import analytic, csvio, error_analysis, laplace, ortho_poly, spectral_basis, wave
from .exceptions import InputError, NumericFailure

EXIT_INPUT = 2
EXIT_NUMERIC = 3

REFERENCE_CHECKPOINTS = ((0.25, 0.75), (0.5, 0.5), (0.75, 0.25))


def parse_profile(text, a=1.0):
    """Built-in boundary profiles: ``zero``, ``constant:<v>``, ``sine:<k>``, ``sine-special``."""
    name, _, arg = text.partition(":")
    if name == "zero" and not arg:
        return lambda x: np.zeros_like(np.asarray(x, dtype=float))
    if name == "sine-special" and not arg:
        return lambda x: np.sinh(np.pi) * np.sin(np.pi * np.asarray(x) / a)
    try:
        if name == "constant":
            value = float(arg)
            if not np.isfinite(value):
                raise ValueError(arg)
            return lambda x: np.full_like(np.asarray(x, dtype=float), value)
        if name == "sine":
            k = int(arg)
            if k < 1:
                raise ValueError(arg)
            return lambda x: np.sin(k * np.pi * np.asarray(x) / a)
    except ValueError:
        raise InputError(f"invalid argument in profile selector {text!r}") from None
    raise InputError(
        f"unknown profile {text!r}; use zero, constant:<v>, sine:<k> or sine-special"
    )


def parse_list(text, kind=float):
    try:
        values = [kind(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InputError(f"cannot parse list {text!r}") from None
    if not values:
        raise InputError("empty list")
    return values


def _laplace_problem(args):
    return laplace.LaplaceProblem(
        n=args.n,
        a=args.a,
        b=args.b,
        bc_left=args.left,
        bc_right=args.right,
        g_bottom=parse_profile(args.bottom, args.a),
        g_top=parse_profile(args.top, args.a),
    )


def _y_grid(args):
    if args.ny < 2:
        raise InputError("--ny must be at least 2")
    return np.linspace(0.0, args.b, args.ny)


def _line_index(x_nodes, x):
    hits = np.flatnonzero(np.isclose(x_nodes, x, rtol=0.0, atol=1e-12))
    if hits.size == 0:
        raise InputError(f"x={x} is not on any line; choose n so that it is a node")
    return int(hits[0])


def _series_applicable(problem):
    D = spectral_basis.BoundaryKind.DIRICHLET
    bottom = laplace.sample_profile(problem.g_bottom, problem.x_nodes)
    if (problem.bc_left, problem.bc_right) != (D, D) or np.any(bottom != 0.0):
        raise InputError(
            "the series reference needs Dirichlet sides and zero data on y = 0"
        )


def cmd_basis(args):
    basis = spectral_basis.closed_form_basis(args.n, args.left, args.right)
    report = spectral_basis.numeric_verify(basis, basis.operator())
    for k, lam in enumerate(basis.lambdas, start=1):
        print(f"lambda_{k} = {csvio.fmt(lam)}")
    print(
        f"eigen_residual={report.eigen_residual:.3e} "
        f"orthonormality_residual={report.orthonormality_residual:.3e} "
        f"gershgorin_violations={report.gershgorin_violations} "
        f"pass={'true' if report.passed else 'false'}"
    )
    if args.out:
        csvio.write_basis(args.out, basis)
    return 0


def cmd_polys(args):
    corners = (
        spectral_basis.BoundaryKind.parse(args.left).corner,
        spectral_basis.BoundaryKind.parse(args.right).corner,
    )
    seq = ortho_poly.build_sequence(args.n, *corners)
    if seq.polys is None:
        raise InputError(f"coefficient table is only available for n <= {ortho_poly.MAX_STORED_DEGREE}")
    for k, coeffs in enumerate(seq.polys):
        print(f"p_{k}: " + " ".join(csvio.fmt(c) for c in coeffs))
    if args.roots:
        roots = ortho_poly.characteristic_roots(seq)
        print("roots: " + " ".join(csvio.fmt(r) for r in roots))
    return 0


def _print_checkpoints(points, values):
    for i, ((x, y), value) in enumerate(zip(points, values), start=1):
        print(f"V{i} = V({x:g},{y:g}) = {value:.4f}")


def cmd_laplace(args):
    problem = _laplace_problem(args)
    field = laplace.solve(problem)
    ys = _y_grid(args)
    grid = field.grid(ys)
    if args.out:
        csvio.write_grid(args.out, ys, problem.x_nodes, grid)
    if args.checkpoints == "paper":
        values = [field(y)[_line_index(problem.x_nodes, x)] for x, y in REFERENCE_CHECKPOINTS]
        _print_checkpoints(REFERENCE_CHECKPOINTS, values)
    print(f"lines={problem.n} h={csvio.fmt(problem.h)} max_abs={csvio.fmt(np.abs(grid).max())}")
    return 0


def _series_for(args):
    return analytic.series_solution(
        parse_profile(args.top, args.a), args.a, args.b, args.kmax, args.quad_tol
    )


def cmd_reference(args):
    sol = _series_for(args)
    ys = _y_grid(args)
    x = args.a / (args.n + 1) * np.arange(1, args.n + 1)
    grid = np.array([[analytic.evaluate_series(sol, xi, y, args.tail_tol).value for xi in x] for y in ys])
    if args.out:
        csvio.write_grid(args.out, ys, x, grid)
    if args.checkpoints == "paper":
        values = [analytic.evaluate_series(sol, x0, y0, args.tail_tol).value for x0, y0 in REFERENCE_CHECKPOINTS]
        _print_checkpoints(REFERENCE_CHECKPOINTS, values)
    print(f"k_max={sol.k_max}")
    return 0


def _make_reference(args, problem):
    choice = args.reference
    if choice == "auto":
        choice = "exact" if args.top == "sine-special" else "series"
    if choice == "mol":
        field = laplace.solve(problem)
        return lambda x, y: field(y)
    _series_applicable(problem)
    if choice == "exact":
        if args.top != "sine-special" or args.a != 1.0 or args.b != 1.0:
            raise InputError("the exact reference needs --top sine-special on the unit square")
        return analytic.exact_special
    return _series_for(args)


def cmd_compare(args):
    problem = _laplace_problem(args)
    reference = _make_reference(args, problem)
    report = error_analysis.error_field(laplace.solve(problem), reference, _y_grid(args), args.fold_tol)
    if args.out:
        csvio.write_grid(args.out, report.y_grid, report.x_nodes, report.curves)
    print(f"max_error={csvio.fmt(report.global_max)}")
    print(f"distinct_curves={report.distinct_curves}")
    return 0


def _laplace_convergence(levels, top):
    exact = analytic.exact_special if top == "special" else (lambda x, y: np.zeros_like(np.asarray(x, dtype=float)))
    make = laplace.special_problem if top == "special" else (lambda n: laplace.LaplaceProblem(n=n))
    return error_analysis.convergence_order(lambda n: laplace.solve(make(n)), exact, levels)


def wave_convergence(row, levels, times=(0.5, 1.0)):
    """``(h, errors, order, pair_orders)`` for a wave table row (0 = zero data)."""
    hs, errors = [], []
    for n in levels:
        if row == 0:
            problem, exact = wave.zero_problem(n), (lambda x, t: np.zeros_like(x))
        else:
            problem, exact = wave.table_problem(row, n)
        result = wave.run_and_compare(problem, exact, times)
        hs.append(problem.dx)
        errors.append(float(result.errors.max()))
    order, pair = error_analysis.fit_order(hs, errors)
    return np.array(hs), np.array(errors), order, pair


def cmd_convergence(args):
    levels = parse_list(args.levels, int)
    if len(levels) < 3:
        raise InputError("a convergence study needs at least three levels")
    problem = args.problem
    if problem.startswith("laplace-"):
        fit = _laplace_convergence(levels, problem.split("-", 1)[1])
        hs, errors, order, pair = fit.h, fit.errors, fit.order, fit.pair_orders
    else:
        row = 0 if problem == "wave-zero" else int(problem[len("wave-row"):])
        hs, errors, order, pair = wave_convergence(row, levels, parse_list(args.times))
    if args.out:
        csvio.write_columns(args.out, ("h", "max_error"), (hs, errors))
    for h, e in zip(hs, errors):
        print(f"h={csvio.fmt(h)} max_error={csvio.fmt(e)}")
    print("order=undefined" if order is None else f"order={order:.4f}")
    return 0


def cmd_wave(args):
    problem, exact = wave.table_problem(args.row, args.n, args.dt)
    result = wave.run_and_compare(problem, exact, parse_list(args.times))
    if args.out:
        rhs = wave.discretize_wave(problem)
        rows = [np.append(s.u, rhs.right_value(s.t, s.u)) for s in result.snapshots]
        x_all = np.append(problem.x_nodes, problem.L)
        csvio.write_grid(args.out, [s.t for s in result.snapshots], x_all, rows, first_name="t")
    for t, e in zip(result.times, result.errors):
        print(f"t={csvio.fmt(t)} max_error={csvio.fmt(e)}")
    print(f"max_constraint_residual={result.max_constraint_residual:.3e} steps={result.steps}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="molines", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def lateral(p):
        p.add_argument("--left", default="D", help="x=0 boundary: D or N")
        p.add_argument("--right", default="D", help="x=a boundary: D or N")

    def rectangle(p):
        p.add_argument("--n", type=int, default=15, help="number of lines")
        p.add_argument("--a", type=float, default=1.0)
        p.add_argument("--b", type=float, default=1.0)
        p.add_argument("--top", default="constant:100", help="profile on y=b")
        p.add_argument("--ny", type=int, default=error_analysis.DEFAULT_NY)
        p.add_argument("--out", help="CSV output path")

    def series_opts(p):
        p.add_argument("--kmax", type=int, default=analytic.DEFAULT_K_MAX)
        p.add_argument("--tail-tol", type=float, default=analytic.DEFAULT_TAIL_TOL)
        p.add_argument("--quad-tol", type=float, default=analytic.DEFAULT_QUAD_TOL)

    p = sub.add_parser("basis", help="eigenvalues and transform matrix of P")
    p.add_argument("--n", type=int, required=True)
    lateral(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("polys", help="Sturm polynomial coefficients (ascending degree)")
    p.add_argument("--n", type=int, required=True)
    lateral(p)
    p.add_argument("--roots", action="store_true", help="also print the eigenvalues")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("laplace", help="MOL solution on the rectangle")
    rectangle(p)
    lateral(p)
    p.add_argument("--bottom", default="zero", help="profile on y=0")
    p.add_argument("--checkpoints", choices=["paper"], help="print V at (1/4,3/4), (1/2,1/2), (3/4,1/4)")
    p.set_defaults(func=cmd_laplace)

    p = sub.add_parser("reference", help="Fourier-series solution sampled on the lines")
    rectangle(p)
    series_opts(p)
    p.add_argument("--checkpoints", choices=["paper"], help="print V at (1/4,3/4), (1/2,1/2), (3/4,1/4)")
    p.set_defaults(func=cmd_reference)

    p = sub.add_parser("compare", help="MOL error curves against a reference")
    rectangle(p)
    lateral(p)
    series_opts(p)
    p.add_argument("--bottom", default="zero")
    p.add_argument("--reference", choices=["auto", "series", "exact", "mol"], default="auto")
    p.add_argument("--fold-tol", type=float, default=error_analysis.FOLD_TOL)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("convergence", help="observed order under refinement")
    p.add_argument(
        "--problem",
        choices=["laplace-special", "laplace-zero", "wave-row1", "wave-row2", "wave-row3",
                 "wave-row4", "wave-zero"],
        default="laplace-special",
    )
    p.add_argument("--levels", default="7,15,31,63", help="comma-separated n values")
    p.add_argument("--times", default="0.5,1.0", help="wave sample times")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("wave", help="wave equation with the integral condition")
    p.add_argument("--row", type=int, choices=[1, 2, 3, 4], default=1)
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--dt", type=float, help="time step (default dx/2)")
    p.add_argument("--times", default="0.5,1.0")
    p.add_argument("--out")
    p.set_defaults(func=cmd_wave)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

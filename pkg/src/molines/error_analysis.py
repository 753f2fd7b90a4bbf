"""Error curves and observed convergence order of the MOL solutions."""

from dataclasses import dataclass

import numpy as np

from .analytic import SeriesSolution
from .exceptions import InputError

DEFAULT_NY = 101
FOLD_TOL = 1e-9


@dataclass(frozen=True)
class ErrorReport:
    n: int
    x_nodes: np.ndarray
    y_grid: np.ndarray
    curves: np.ndarray  # shape (len(y_grid), n): |V_mol - V_ref|
    per_line_max: np.ndarray
    global_max: float
    distinct_curves: int


def _reference_values(reference, x, y):
    values = np.asarray(reference(x, y), dtype=float)
    if values.shape != x.shape:
        values = np.array([float(reference(xi, y)) for xi in x])
    return values


def count_distinct_curves(curves, fold_tol=FOLD_TOL):
    """Lines left after merging each mirror pair ``j <-> N+1-j`` that agree to ``fold_tol``."""
    n = curves.shape[1]
    merged = sum(
        1
        for j in range(n // 2)
        if np.abs(curves[:, j] - curves[:, n - 1 - j]).max() <= fold_tol
    )
    return n - merged


def error_field(solution, reference, y_grid=None, fold_tol=FOLD_TOL):
    """Tabulate ``|V_mol(x_j, y) - V_ref(x_j, y)|`` for every line and ``y``.

    ``solution`` is a :class:`~molines.laplace.LineField`; ``reference`` is any
    callable ``(x, y) -> value`` (array ``x`` or scalar) on the same rectangle.
    """
    problem = solution.problem
    if isinstance(reference, SeriesSolution) and (
        not np.isclose(reference.a, problem.a) or not np.isclose(reference.b, problem.b)
    ):
        raise InputError(
            f"reference on {reference.a} x {reference.b} does not match "
            f"problem on {problem.a} x {problem.b}"
        )
    if y_grid is None:
        y_grid = np.linspace(0.0, problem.b, DEFAULT_NY)
    y_grid = np.asarray(y_grid, dtype=float)
    if y_grid.size == 0 or y_grid.min() < 0.0 or y_grid.max() > problem.b:
        raise InputError(f"y grid must be non-empty and inside [0, {problem.b}]")
    x = solution.x_nodes
    curves = np.array(
        [np.abs(solution(y) - _reference_values(reference, x, y)) for y in y_grid]
    )
    per_line = curves.max(axis=0)
    return ErrorReport(
        n=problem.n,
        x_nodes=x,
        y_grid=y_grid,
        curves=curves,
        per_line_max=per_line,
        global_max=float(per_line.max()),
        distinct_curves=count_distinct_curves(curves, fold_tol),
    )


@dataclass(frozen=True)
class ConvergenceFit:
    h: np.ndarray
    errors: np.ndarray
    order: float | None  # least-squares slope of log(error) against log(h)
    pair_orders: np.ndarray | None  # log2-style slopes between successive levels
    probe_errors: np.ndarray | None = None
    probe_ratios: np.ndarray | None = None

    @property
    def last_pair_order(self):
        return None if self.pair_orders is None else float(self.pair_orders[-1])


def fit_order(h, errors):
    """Observed order ``p`` in ``error ~ C h^p``.

    Returns ``(p, pair_orders)``, both ``None`` when any error is exactly zero
    and the order is therefore undefined.
    """
    h = np.asarray(h, dtype=float)
    errors = np.asarray(errors, dtype=float)
    if h.shape != errors.shape or h.size < 2:
        raise InputError("need matching h and error vectors with at least two levels")
    if np.any(np.diff(h) >= 0):
        raise InputError("h values must be strictly decreasing")
    if np.any(errors == 0.0):
        return None, None
    log_h, log_e = np.log(h), np.log(errors)
    slope = float(np.polyfit(log_h, log_e, 1)[0])
    pair = np.diff(log_e) / np.diff(log_h)
    return slope, pair


def convergence_order(make_solution, exact, n_list, y_grid=None, probe=(0.5, 0.5)):
    """Refinement study of ``max_{j, y} |V_mol - V_exact|`` over ``n_list``.

    ``make_solution(n)`` returns a :class:`~molines.laplace.LineField`; the
    probe point is also tracked when it lies on a line at every level.
    """
    n_list = [int(n) for n in n_list]
    if len(n_list) < 3:
        raise InputError("a convergence study needs at least three levels")
    hs, errors, probe_errors = [], [], []
    for n in n_list:
        solution = make_solution(n)
        report = error_field(solution, exact, y_grid)
        hs.append(solution.problem.h)
        errors.append(report.global_max)
        px, py = probe
        on_line = np.flatnonzero(np.isclose(solution.x_nodes, px, rtol=0.0, atol=1e-14))
        if on_line.size and probe_errors is not None:
            value = solution(py)[on_line[0]]
            probe_errors.append(abs(value - float(exact(px, py))))
        else:
            probe_errors = None
    order, pair = fit_order(hs, errors)
    probe_ratios = None
    if probe_errors is not None:
        probe_errors = np.array(probe_errors)
        with np.errstate(divide="ignore", invalid="ignore"):
            probe_ratios = probe_errors[:-1] / probe_errors[1:]
    return ConvergenceFit(np.array(hs), np.array(errors), order, pair, probe_errors, probe_ratios)

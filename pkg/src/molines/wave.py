"""Wave equation with a nonlocal integral condition, by the method of lines.

Solves ``v_tt - v_xx = q(x, t)`` on ``(0, L) x (0, T]`` with

    v(x, 0) = f1(x),   v_t(x, 0) = f2(x),
    v(0, t) = g1(t),   int_0^L v(x, t) dx = g2(t).

Space is discretized on interior nodes ``x_j = j dx`` (``dx = L/(n+1)``).
The right-end value ``v_R = v(L, t)`` is not a state variable: the composite
trapezoid form of the integral condition,

    dx * (g1/2 + sum_j u_j + v_R/2) = g2,

is solved for it at every evaluation.  The resulting first-order system in
``(u, w = u_t)`` is advanced with the classical four-stage Runge-Kutta step.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import InputError, InstabilityError

CFL_MAX = 1.0


@dataclass(frozen=True)
class WaveProblem:
    L: float
    T: float
    q: Callable
    f1: Callable
    f2: Callable
    g1: Callable
    g2: Callable
    n: int
    dt: float | None = None  # defaults to dx / 2

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 3:
            raise InputError(f"need at least 3 interior nodes, got n={self.n!r}")
        if not (self.L > 0 and self.T > 0):
            raise InputError(f"L and T must be positive, got L={self.L}, T={self.T}")
        object.__setattr__(self, "n", int(self.n))
        if self.dt is None:
            object.__setattr__(self, "dt", 0.5 * self.dx)
        if not 0 < self.dt <= CFL_MAX * self.dx * (1 + 1e-12):
            raise InputError(f"dt={self.dt} violates 0 < dt <= dx={self.dx}")

    @property
    def dx(self):
        return self.L / (self.n + 1)

    @property
    def x_nodes(self):
        return self.dx * np.arange(1, self.n + 1)


@dataclass(frozen=True)
class WaveState:
    t: float
    u: np.ndarray
    w: np.ndarray


def _finite_scalar(name, value, t):
    value = float(value)
    if not np.isfinite(value):
        raise InputError(f"{name}({t!r}) is not finite")
    return value


class WaveRHS:
    """Semi-discrete right-hand side ``(t, u, w) -> (u_t, w_t)``."""

    def __init__(self, problem):
        self.problem = problem
        self.x = problem.x_nodes
        self.dx = problem.dx

    def right_value(self, t, u):
        """``v(L, t)`` from the trapezoid form of the integral condition."""
        p = self.problem
        g1 = _finite_scalar("g1", p.g1(t), t)
        g2 = _finite_scalar("g2", p.g2(t), t)
        return 2.0 * (g2 / self.dx - 0.5 * g1 - np.sum(u))

    def constraint_residual(self, t, u):
        p = self.problem
        v_r = self.right_value(t, u)
        return self.dx * (0.5 * p.g1(t) + np.sum(u) + 0.5 * v_r) - p.g2(t)

    def full_profile(self, t, u):
        """Values at ``0, x_1..x_n, L``."""
        left = _finite_scalar("g1", self.problem.g1(t), t)
        return np.concatenate(([left], u, [self.right_value(t, u)]))

    def __call__(self, t, u, w):
        q = np.asarray(self.problem.q(self.x, t), dtype=float)
        q = np.broadcast_to(q, self.x.shape)
        if not np.all(np.isfinite(q)):
            raise InputError(f"q is not finite at t={t!r}")
        v = self.full_profile(t, u)
        accel = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / self.dx**2 + q
        return w, accel


def discretize_wave(problem):
    return WaveRHS(problem)


def initial_state(problem):
    x = problem.x_nodes
    u0 = np.broadcast_to(np.asarray(problem.f1(x), dtype=float), x.shape).copy()
    w0 = np.broadcast_to(np.asarray(problem.f2(x), dtype=float), x.shape).copy()
    if not (np.all(np.isfinite(u0)) and np.all(np.isfinite(w0))):
        raise InputError("initial data is not finite")
    return WaveState(0.0, u0, w0)


def step_rk4(rhs, state, dt):
    if not dt > 0:
        raise InputError(f"time step must be positive, got {dt}")
    t, u, w = state.t, state.u, state.w

    def stage(ts, us, ws):
        du, dw = rhs(ts, us, ws)
        if not (np.all(np.isfinite(du)) and np.all(np.isfinite(dw))):
            raise InstabilityError(f"non-finite stage values at t={ts:.6g}")
        return du, dw

    k1u, k1w = stage(t, u, w)
    k2u, k2w = stage(t + dt / 2, u + dt / 2 * k1u, w + dt / 2 * k1w)
    k3u, k3w = stage(t + dt / 2, u + dt / 2 * k2u, w + dt / 2 * k2w)
    k4u, k4w = stage(t + dt, u + dt * k3u, w + dt * k3w)
    return WaveState(
        t + dt,
        u + dt / 6 * (k1u + 2 * k2u + 2 * k3u + k4u),
        w + dt / 6 * (k1w + 2 * k2w + 2 * k3w + k4w),
    )


@dataclass(frozen=True)
class WaveComparison:
    times: np.ndarray
    errors: np.ndarray  # max over x_1..x_n and x = L
    max_constraint_residual: float
    steps: int
    snapshots: tuple  # WaveState at t = 0 and at each sample time


def run_and_compare(problem, analytic, sample_times):
    """Integrate to each sample time and record the max nodal error there.

    Each interval between sample times is covered by equal steps no larger
    than ``problem.dt``; the integral-constraint residual is checked after
    every step.
    """
    times = np.asarray(sorted(float(t) for t in sample_times))
    if times.size == 0 or times[0] <= 0 or times[-1] > problem.T * (1 + 1e-12):
        raise InputError(f"sample times must lie in (0, {problem.T}]")
    rhs = discretize_wave(problem)
    state = initial_state(problem)
    snapshots = [state]
    x_all = np.append(problem.x_nodes, problem.L)
    errors, worst_residual, steps = [], 0.0, 0
    for target in times:
        span = target - state.t
        m = max(1, int(np.ceil(span / problem.dt - 1e-9)))
        dt = span / m
        for i in range(m):
            state = step_rk4(rhs, state, dt)
            steps += 1
            worst_residual = max(worst_residual, abs(rhs.constraint_residual(state.t, state.u)))
        # pin the clock to the sample time so analytic values are exact
        state = WaveState(float(target), state.u, state.w)
        snapshots.append(state)
        numeric = np.append(state.u, rhs.right_value(state.t, state.u))
        errors.append(float(np.abs(numeric - analytic(x_all, state.t)).max()))
    return WaveComparison(times, np.array(errors), worst_residual, steps, tuple(snapshots))


_EXP = np.exp
_PI = np.pi


def _zeros(x, t=None):
    return np.zeros_like(np.asarray(x, dtype=float))


WAVE_TABLE = {
    1: dict(
        L=1.0, T=4.0,
        q=lambda x, t: _zeros(x),
        f1=_zeros,
        f2=lambda x: _PI * np.cos(_PI * x),
        g1=lambda t: np.sin(_PI * t),
        g2=lambda t: 0.0,
        exact=lambda x, t: np.cos(_PI * x) * np.sin(_PI * t),
    ),
    2: dict(
        L=1.0, T=5.0,
        q=lambda x, t: -2.0 * (x - t) * _EXP(-x - t),
        f1=_zeros,
        f2=lambda x: x * _EXP(-x),
        g1=lambda t: 0.0,
        g2=lambda t: -2.0 * t * _EXP(-t - 1.0) + t * _EXP(-t),
        exact=lambda x, t: x * t * _EXP(-x - t),
    ),
    3: dict(
        L=1.0, T=4.0,
        q=lambda x, t: _zeros(x),
        f1=lambda x: np.cos(_PI * x),
        f2=_zeros,
        g1=lambda t: np.cos(_PI * t),
        g2=lambda t: 0.0,
        exact=lambda x, t: 0.5 * np.cos(_PI * (x + t)) + 0.5 * np.cos(_PI * (x - t)),
    ),
    4: dict(
        L=1.0, T=5.0,
        q=lambda x, t: (2 * x**5 + 2 * x**3 - 2 * x**2) - (20 * x**3 + 6 * x - 2) * (t**2 - t),
        f1=_zeros,
        f2=lambda x: -(x**5) - x**3 + x**2,
        g1=lambda t: 0.0,
        g2=lambda t: t * (t - 1.0) / 12.0,
        exact=lambda x, t: (x**5 + x**3 - x**2) * (t**2 - t),
    ),
}


def table_problem(row, n, dt=None):
    """``(WaveProblem, exact solution)`` for one of the four catalogued cases."""
    try:
        spec = dict(WAVE_TABLE[row])
    except KeyError:
        raise InputError(f"unknown wave table row {row!r}; expected 1-4") from None
    exact = spec.pop("exact")
    return WaveProblem(n=n, dt=dt, **spec), exact


def zero_problem(n, T=1.0):
    return WaveProblem(
        L=1.0, T=T, q=lambda x, t: _zeros(x), f1=_zeros, f2=_zeros,
        g1=lambda t: 0.0, g2=lambda t: 0.0, n=n,
    )

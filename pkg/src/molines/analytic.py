"""Separation-of-variables reference solution on the rectangle.

For ``V = 0`` on ``x = 0``, ``x = a`` and ``y = 0`` and ``V(x, b) = f(x)``:

    V(x, y) = sum_k alpha_k sinh(k pi y / a) / sinh(k pi b / a) sin(k pi x / a)

with ``alpha_k = (2/a) int_0^a f(x) sin(k pi x / a) dx``.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.fft

from .exceptions import DomainError, InputError, NumericFailure
from .hyperbolic import decay_bound, sinh_ratio
from .laplace import sample_profile

DEFAULT_K_MAX = 400
DEFAULT_TAIL_TOL = 1e-12
DEFAULT_QUAD_TOL = 1e-10
MAX_PANELS = 2**20


def _simpson_sine_sums(f, a, k_max, panels):
    # Composite Simpson on `panels` intervals for every k at once.  The
    # Simpson weights 1,4,2,...,4,1 are folded into the samples, leaving a
    # plain type-I sine sum over the interior nodes (the endpoint terms carry
    # sin(0) = sin(k pi) = 0).
    h = a / panels
    i = np.arange(1, panels)
    samples = sample_profile(f, h * i)
    weighted = samples * np.where(i % 2 == 1, 4.0, 2.0)
    sums = scipy.fft.dst(weighted, type=1)[:k_max] / 2.0
    return (2.0 / a) * (h / 3.0) * sums


def fourier_coefficients(f, a=1.0, k_max=DEFAULT_K_MAX, quad_tol=DEFAULT_QUAD_TOL):
    """Sine coefficients ``alpha_1..alpha_kmax`` of ``f`` on ``(0, a)``.

    Panels are doubled until successive Simpson estimates agree to
    ``quad_tol * (1 + |alpha_k|)`` for every ``k``.
    """
    if k_max < 1:
        raise InputError(f"k_max must be at least 1, got {k_max}")
    if not a > 0:
        raise InputError(f"a must be positive, got {a}")
    panels = 16
    while panels <= 2 * (k_max + 1):
        panels *= 2
    previous = _simpson_sine_sums(f, a, k_max, panels)
    if not np.all(np.isfinite(previous)):
        raise InputError("profile produced non-finite samples")
    while panels < MAX_PANELS:
        panels *= 2
        current = _simpson_sine_sums(f, a, k_max, panels)
        if np.all(np.abs(current - previous) <= quad_tol * (1.0 + np.abs(current))):
            return current
        previous = current
    raise NumericFailure(f"Simpson quadrature did not converge within {MAX_PANELS} panels")


class SeriesValue(NamedTuple):
    value: float
    terms: int
    truncated: bool
    gibbs_warning: bool


@dataclass(frozen=True)
class SeriesSolution:
    a: float
    b: float
    alphas: np.ndarray

    @property
    def k_max(self):
        return len(self.alphas)

    def __call__(self, x, y, tail_tol=DEFAULT_TAIL_TOL):
        """Series value at ``(x, y)``; ``x`` may be an array."""
        if np.ndim(x) == 0:
            return evaluate_series(self, x, y, tail_tol).value
        return np.array([evaluate_series(self, xi, y, tail_tol).value for xi in np.ravel(x)])


def series_solution(f, a=1.0, b=1.0, k_max=DEFAULT_K_MAX, quad_tol=DEFAULT_QUAD_TOL):
    if not b > 0:
        raise InputError(f"b must be positive, got {b}")
    return SeriesSolution(float(a), float(b), fourier_coefficients(f, a, k_max, quad_tol))


def _terms_needed(sol, y, tail_tol):
    # Smallest K such that the geometric bound on the remaining tail,
    # max_{m > K} |alpha_m| e^{-m pi (b - y)/a} / (1 - e^{-pi (b - y)/a}), is
    # below tail_tol.  None when no such K <= k_max exists.
    gap = sol.b - y
    if gap <= 0:
        return None
    k = np.arange(1, sol.k_max + 1)
    suffix_max = np.maximum.accumulate(np.abs(sol.alphas)[::-1])[::-1]
    ratio = np.exp(-np.pi * gap / sol.a)
    bound = suffix_max * decay_bound(k * np.pi / sol.a, y, sol.b) / (1.0 - ratio)
    below = np.flatnonzero(bound < tail_tol)
    if below.size == 0:
        return None
    # bound[i] covers terms i+1, i+2, ...; keep terms 1..i.
    return int(below[0])


def evaluate_series(sol, x, y, tail_tol=DEFAULT_TAIL_TOL):
    """Partial sum of the series at ``(x, y)``.

    Summation stops once a geometric bound on the remaining tail drops below
    ``tail_tol``; otherwise all ``k_max`` terms are used and ``truncated`` is
    set.  Near ``y = b`` a truncated sum is also flagged with
    ``gibbs_warning``, since it oscillates there for discontinuous data.
    """
    if not (0.0 <= x <= sol.a and 0.0 <= y <= sol.b):
        raise DomainError(f"({x!r}, {y!r}) outside [0, {sol.a}] x [0, {sol.b}]")
    needed = _terms_needed(sol, y, tail_tol)
    truncated = needed is None
    terms = sol.k_max if truncated else needed
    gibbs = truncated and y > 0.99 * sol.b
    if x == 0.0 or x == sol.a or y == 0.0 or terms == 0:
        return SeriesValue(0.0, terms, truncated, gibbs)
    k = np.arange(1, terms + 1)
    rate = k * np.pi / sol.a
    value = np.sum(sol.alphas[:terms] * sinh_ratio(rate, y, sol.b) * np.sin(rate * x))
    return SeriesValue(float(value), terms, truncated, gibbs)


def exact_special(x, y):
    """``sinh(pi y) sin(pi x)``: exact solution for ``f(x) = sinh(pi) sin(pi x)``, ``a = b = 1``."""
    return np.sinh(np.pi * np.asarray(y)) * np.sin(np.pi * np.asarray(x))

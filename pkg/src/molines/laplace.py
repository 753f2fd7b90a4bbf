"""Method of lines for the Laplace equation on a rectangle.

The x direction is replaced by ``N`` lines ``x_j = j h`` with
``h = a / (N + 1)``.  Along the lines the potential satisfies the coupled
system ``V'' = (1/h^2) P V`` in ``y``; the spectral transform ``T`` decouples
it into scalar problems ``Vbar_k'' = (omega_k / h)^2 Vbar_k`` whose solutions
are hyperbolic in ``y``.  Dirichlet data on ``y = 0`` and ``y = b`` fix the
two constants of every mode.
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exceptions import DomainError, InputError
from .hyperbolic import sinh_ratio
from .spectral_basis import BoundaryKind, closed_form_basis, forward_transform


def sample_profile(f, x):
    """Evaluate ``f`` on the array ``x``, accepting scalar-valued callables."""
    values = np.asarray(f(x), dtype=float)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape).astype(float)
    return values


def _zero(x):
    return np.zeros_like(x)


@dataclass(frozen=True)
class LaplaceProblem:
    """``V_xx + V_yy = 0`` on ``(0, a) x (0, b)`` discretized on ``n`` lines.

    ``g_bottom`` and ``g_top`` are the Dirichlet profiles on ``y = 0`` and
    ``y = b``; they are only ever sampled at the line abscissas.
    """

    n: int
    a: float = 1.0
    b: float = 1.0
    bc_left: BoundaryKind = BoundaryKind.DIRICHLET
    bc_right: BoundaryKind = BoundaryKind.DIRICHLET
    g_bottom: Callable = _zero
    g_top: Callable = _zero

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise InputError(f"number of lines must be a positive integer, got {self.n!r}")
        if not (self.a > 0 and self.b > 0 and np.isfinite(self.a) and np.isfinite(self.b)):
            raise InputError(f"rectangle sides must be positive, got a={self.a}, b={self.b}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "bc_left", BoundaryKind.parse(self.bc_left))
        object.__setattr__(self, "bc_right", BoundaryKind.parse(self.bc_right))

    @property
    def h(self):
        return self.a / (self.n + 1)

    @property
    def x_nodes(self):
        return self.h * np.arange(1, self.n + 1)


@dataclass(frozen=True)
class ModeCoefficients:
    """Per-mode boundary data in the transformed variables.

    Mode ``k`` is ``A_k cosh(omega_k y / h) + B_k sinh(omega_k y / h)`` (or
    ``A_k + B_k y`` when ``omega_k == 0``).  Only the transformed boundary
    values are stored; evaluation combines them through bounded sinh ratios,
    so the raw amplitudes are never needed.
    """

    omegas: np.ndarray
    c_bottom: np.ndarray
    c_top: np.ndarray
    b: float
    h: float

    def __len__(self):
        return len(self.omegas)

    @property
    def rates(self):
        return self.omegas / self.h

    def amplitudes(self):
        """Raw ``(A, B)``.  May overflow to ``inf`` for large ``omega * b / h``.

        For ``omega == 0`` the pair is (value, slope) of the linear mode.
        """
        s = self.rates
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            big_a = self.c_bottom.copy()
            big_b = np.where(
                s > 0,
                (self.c_top - big_a * np.cosh(s * self.b)) / np.sinh(s * self.b),
                (self.c_top - self.c_bottom) / self.b,
            )
        return big_a, big_b

    def values(self, y):
        """Transformed potential ``Vbar(y)``.

        Uses ``Vbar_k(y) = c_bottom_k sinh(s (b - y)) / sinh(s b)
        + c_top_k sinh(s y) / sinh(s b)``, identical to the cosh/sinh form.
        """
        if not 0.0 <= y <= self.b:
            raise DomainError(f"y={y!r} outside [0, {self.b}]")
        s = self.rates
        return self.c_bottom * sinh_ratio(s, self.b - y, self.b) + self.c_top * sinh_ratio(
            s, y, self.b
        )


def discretize(problem):
    """Spectral basis plus transformed bottom and top data ``T^T g(x_j)``."""
    basis = closed_form_basis(problem.n, problem.bc_left, problem.bc_right)
    x = problem.x_nodes
    transformed = []
    for name, profile in (("g_bottom", problem.g_bottom), ("g_top", problem.g_top)):
        samples = sample_profile(profile, x)
        bad = np.flatnonzero(~np.isfinite(samples))
        if bad.size:
            j = int(bad[0]) + 1
            raise InputError(f"{name} is not finite at line {j} (x={x[j - 1]!r})")
        transformed.append(forward_transform(basis, samples))
    return basis, transformed[0], transformed[1]


def solve_modes(c_bottom, c_top, omegas, b, h):
    c_bottom = np.asarray(c_bottom, dtype=float)
    c_top = np.asarray(c_top, dtype=float)
    omegas = np.asarray(omegas, dtype=float)
    if not c_bottom.shape == c_top.shape == omegas.shape:
        raise InputError("mode vectors must have equal lengths")
    if not (b > 0 and h > 0):
        raise InputError(f"b and h must be positive, got b={b}, h={h}")
    return ModeCoefficients(omegas, c_bottom, c_top, float(b), float(h))


def evaluate(basis, modes, y):
    """Potential on all lines at height ``y``: ``V(y) = T Vbar(y)``."""
    return basis.t_matrix @ modes.values(y)


@dataclass(frozen=True)
class LineField:
    """MOL solution: ``field(y)`` returns ``V(x_j, y)`` for ``j = 1..N``."""

    problem: LaplaceProblem
    basis: object
    modes: ModeCoefficients
    x_nodes: np.ndarray = field(repr=False)

    def __call__(self, y):
        return evaluate(self.basis, self.modes, y)

    def grid(self, y_values):
        """Array of shape ``(len(y_values), N)``."""
        return np.array([self(float(y)) for y in y_values])

    def line(self, j, y_values):
        """Samples of line ``j`` (1-based) at ``y_values``."""
        return self.grid(y_values)[:, j - 1]


def solve(problem):
    basis, c_bottom, c_top = discretize(problem)
    modes = solve_modes(c_bottom, c_top, basis.omegas, problem.b, problem.h)
    return LineField(problem, basis, modes, problem.x_nodes)


def special_problem(n):
    """Unit square, zero data except ``V(x, 1) = sinh(pi) sin(pi x)``."""
    return LaplaceProblem(
        n=n, g_top=lambda x: np.sinh(np.pi) * np.sin(np.pi * np.asarray(x))
    )


def constant_top_problem(n=15):
    """Unit square, zero data except ``V(x, 1) = 100``."""
    return LaplaceProblem(n=n, g_top=lambda x: np.full_like(np.asarray(x, dtype=float), 100.0))


def solve_special_closed_form(n):
    """Compact formula ``sinh(pi sinc(h) y) sin(pi x_j)`` for :func:`special_problem`.

    ``sinc(x) = sin(pi x) / (pi x)`` as in :func:`numpy.sinc`.  This is the
    expression as it is usually quoted for this problem; it does *not*
    reproduce the top boundary data at ``y = 1``.  The sampler that agrees
    with :func:`solve` is :func:`solve_special_exact_mol`.
    """
    h = 1.0 / (n + 1)
    x = h * np.arange(1, n + 1)
    rate = np.pi * np.sinc(h)

    def sampler(y):
        return np.sinh(rate * y) * np.sin(np.pi * x)

    return sampler


def solve_special_exact_mol(n):
    """Closed form of the MOL solution of :func:`special_problem`.

    The samples ``sin(pi x_j)`` are exactly the first eigenvector of ``P``, so
    only mode 1 is excited, with rate ``omega_1 / h = pi sinc(h / 2)``:

        V_j(y) = sinh(pi) sinh(pi sinc(h/2) y) / sinh(pi sinc(h/2)) sin(pi x_j)
    """
    h = 1.0 / (n + 1)
    x = h * np.arange(1, n + 1)
    rate = np.pi * np.sinc(h / 2)

    def sampler(y):
        return np.sinh(np.pi) * sinh_ratio(rate, y, 1.0) * np.sin(np.pi * x)

    return sampler

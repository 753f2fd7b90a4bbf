"""Tridiagonal semi-discretization operator and its closed-form eigenbasis.

Discretizing ``d^2/dx^2`` on ``N`` interior lines with the central stencil
gives ``-(1/h^2) P`` where ``P`` is tridiagonal with ``-1`` off the diagonal,
``2`` on the diagonal, and corner entries that depend on the lateral
boundary conditions (Dirichlet -> 2, Neumann -> 1).  ``P`` is diagonalized by
a sine/cosine transform whose entries and eigenvalues are known in closed
form for every combination of boundary conditions.
"""

from dataclasses import dataclass
import enum

import numpy as np

from .exceptions import InputError


class BoundaryKind(enum.Enum):
    DIRICHLET = "D"
    NEUMANN = "N"

    @property
    def corner(self):
        """Corner entry of ``P`` contributed by this boundary."""
        return 2.0 if self is BoundaryKind.DIRICHLET else 1.0

    @classmethod
    def parse(cls, value):
        """Accept a ``BoundaryKind``, ``"D"``/``"N"`` or the full name."""
        if isinstance(value, cls):
            return value
        text = str(value).strip().upper()
        for kind in cls:
            if text in (kind.value, kind.name):
                return kind
        raise InputError(f"unknown boundary kind {value!r}; expected D or N")


D = BoundaryKind.DIRICHLET
N = BoundaryKind.NEUMANN

ALL_COMBOS = ((D, D), (D, N), (N, D), (N, N))


def _check_size(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InputError(f"number of lines must be a positive integer, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class TridiagonalOperator:
    """The stencil ``P``, stored as its size and two corner values."""

    n: int
    p_left: float
    p_right: float

    def diagonal(self):
        diag = np.full(self.n, 2.0)
        # With a single line both corner corrections land on the same entry.
        diag[0] -= 2.0 - self.p_left
        diag[-1] -= 2.0 - self.p_right
        return diag

    def dense(self):
        off = -np.ones(self.n - 1)
        return np.diag(self.diagonal()) + np.diag(off, 1) + np.diag(off, -1)

    def matvec(self, v):
        v = np.asarray(v, dtype=float)
        out = self.diagonal() * v
        out[:-1] -= v[1:]
        out[1:] -= v[:-1]
        return out


def build_operator(n, bc_left, bc_right):
    n = _check_size(n)
    return TridiagonalOperator(
        n, BoundaryKind.parse(bc_left).corner, BoundaryKind.parse(bc_right).corner
    )


@dataclass(frozen=True)
class SpectralBasis:
    """Eigenvalues ``lambdas`` (ascending) and orthonormal eigenvectors of ``P``.

    Column ``k`` of ``t_matrix`` is the unit eigenvector for ``lambdas[k]``.
    """

    n: int
    bc_left: BoundaryKind
    bc_right: BoundaryKind
    lambdas: np.ndarray
    t_matrix: np.ndarray

    @property
    def omegas(self):
        return np.sqrt(self.lambdas)

    def operator(self):
        return build_operator(self.n, self.bc_left, self.bc_right)


def fix_column_signs(t):
    """Flip columns so the first entry that is not round-off zero is positive."""
    t = np.array(t, dtype=float, copy=True)
    scale = np.abs(t).max(axis=0, keepdims=True)
    significant = np.abs(t) > 1e-12 * np.where(scale > 0, scale, 1.0)
    first = np.argmax(significant, axis=0)
    signs = np.sign(t[first, np.arange(t.shape[1])])
    signs[signs == 0] = 1.0
    return t * signs


def closed_form_basis(n, bc_left, bc_right):
    n = _check_size(n)
    left, right = BoundaryKind.parse(bc_left), BoundaryKind.parse(bc_right)
    j = np.arange(1, n + 1, dtype=float)[:, None]
    k = np.arange(1, n + 1, dtype=float)[None, :]
    kk = k.ravel()
    if (left, right) == (D, D):
        t = np.sqrt(2.0 / (n + 1)) * np.sin(j * k * np.pi / (n + 1))
        lambdas = 4.0 * np.sin(kk * np.pi / (2 * n + 2)) ** 2
    elif (left, right) == (D, N):
        t = np.sqrt(2.0 / (n + 0.5)) * np.sin(j * (k - 0.5) * np.pi / (n + 0.5))
        lambdas = 4.0 * np.sin((kk - 0.5) * np.pi / (2 * n + 1)) ** 2
    elif (left, right) == (N, D):
        t = np.sqrt(2.0 / (n + 0.5)) * np.cos((j - 0.5) * (k - 0.5) * np.pi / (n + 0.5))
        lambdas = 4.0 * np.sin((kk - 0.5) * np.pi / (2 * n + 1)) ** 2
    else:
        t = np.sqrt(2.0 / n) * np.cos((j - 0.5) * (k - 1) * np.pi / n)
        t[:, 0] = 1.0 / np.sqrt(n)
        lambdas = 4.0 * np.sin((kk - 1) * np.pi / (2 * n)) ** 2
    return SpectralBasis(n, left, right, lambdas, fix_column_signs(t))


@dataclass(frozen=True)
class VerifyReport:
    eigen_residual: float
    orthonormality_residual: float
    gershgorin_violations: int
    passed: bool


def numeric_verify(basis, op, tol=1e-11):
    """Check ``P T = T diag(lambda)``, ``T^T T = I`` and ``lambda in [0, 4]``.

    ``passed`` requires both residuals ``<= tol`` and no eigenvalue outside
    the Gershgorin interval.
    """
    t = np.asarray(basis.t_matrix, dtype=float)
    lambdas = np.asarray(basis.lambdas, dtype=float)
    if t.shape != (op.n, op.n) or lambdas.shape != (op.n,) or basis.n != op.n:
        raise InputError(
            f"basis of size {basis.n} (T {t.shape}) does not match operator of size {op.n}"
        )
    p = op.dense()
    eigen_residual = float(np.abs(p @ t - t * lambdas).max())
    ortho_residual = float(np.abs(t.T @ t - np.eye(op.n)).max())
    violations = int(np.count_nonzero((lambdas < 0.0) | (lambdas > 4.0)))
    passed = eigen_residual <= tol and ortho_residual <= tol and violations == 0
    return VerifyReport(eigen_residual, ortho_residual, violations, passed)


def _check_vector(basis, v):
    v = np.asarray(v, dtype=float)
    if v.shape != (basis.n,):
        raise InputError(f"expected a vector of length {basis.n}, got shape {v.shape}")
    return v


def forward_transform(basis, v):
    """Transformed potential ``T^T v``."""
    return basis.t_matrix.T @ _check_vector(basis, v)


def inverse_transform(basis, vbar):
    """Back-transform ``T vbar``."""
    return basis.t_matrix @ _check_vector(basis, vbar)

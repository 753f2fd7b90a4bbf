"""Sturm sequence of orthogonal polynomials attached to ``P``.

The leading principal minors of ``P - x I`` satisfy the three-term recurrence

    p_0 = 1,  p_1 = p_left - x,  p_{k+1} = (2 - x) p_k - p_{k-1},
    p_N = (p_right - x) p_{N-1} - p_{N-2},

so ``p_N`` is the characteristic polynomial of ``P`` and the vector
``(p_0(lam), ..., p_{N-1}(lam))`` is an eigenvector for each root ``lam``.
This gives an eigen-solver for ``P`` that shares nothing with the closed
forms in :mod:`molines.spectral_basis`.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .exceptions import DomainError, InputError, NumericFailure
from .spectral_basis import fix_column_signs

MAX_STORED_DEGREE = 20


@dataclass(frozen=True)
class PolynomialSequence:
    """The recurrence data plus, for ``n <= 20``, monomial coefficients.

    ``polys[k]`` holds the ascending coefficients of ``p_k``.  For larger
    ``n`` the expanded coefficients are too ill-conditioned to be useful and
    ``polys`` is ``None``; evaluation always runs the recurrence.
    """

    n: int
    p_left: float
    p_right: float
    polys: tuple | None

    def diagonal(self):
        diag = np.full(self.n, 2.0)
        diag[0] -= 2.0 - self.p_left
        diag[-1] -= 2.0 - self.p_right
        return diag

    def values(self, x):
        """``[p_0(x), ..., p_N(x)]`` by the recurrence."""
        diag = self.diagonal()
        out = np.empty(self.n + 1)
        out[0] = 1.0
        out[1] = diag[0] - x
        for k in range(1, self.n):
            out[k + 1] = (diag[k] - x) * out[k] - out[k - 1]
        return out

    def char_poly(self, x):
        """``p_N(x)`` together with its derivative."""
        diag = self.diagonal()
        prev, cur = 1.0, diag[0] - x
        dprev, dcur = 0.0, -1.0
        for k in range(1, self.n):
            nxt = (diag[k] - x) * cur - prev
            dnxt = -cur + (diag[k] - x) * dcur - dprev
            prev, cur, dprev, dcur = cur, nxt, dcur, dnxt
        return cur, dcur

    def count_below(self, x):
        """Number of eigenvalues of ``P`` strictly below ``x``.

        Counts negative pivots of the LDL^T factorization of ``P - x I``,
        i.e. sign changes of the Sturm sequence, using ratios of successive
        minors so no overflow or exact-zero ambiguity can occur.
        """
        diag = self.diagonal()
        tiny = np.finfo(float).tiny
        count = 0
        q = diag[0] - x
        for k in range(self.n):
            if k > 0:
                q = (diag[k] - x) - 1.0 / q
            if q == 0.0:
                q = -tiny
            if q < 0.0:
                count += 1
        return count

    def coefficients(self, k):
        if self.polys is None:
            raise InputError(
                f"monomial coefficients are only stored for n <= {MAX_STORED_DEGREE}"
            )
        return np.asarray(self.polys[k])


def build_sequence(n, p_left, p_right):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InputError(f"number of lines must be a positive integer, got {n!r}")
    n = int(n)
    for name, value in (("p_left", p_left), ("p_right", p_right)):
        if value not in (1, 2):
            raise InputError(f"{name} must be 1 (Neumann) or 2 (Dirichlet), got {value!r}")
    seq = PolynomialSequence(n, float(p_left), float(p_right), None)
    if n > MAX_STORED_DEGREE:
        return seq
    x = Polynomial([0.0, 1.0])
    diag = seq.diagonal()
    polys = [Polynomial([1.0]), diag[0] - x]
    for k in range(1, n):
        polys.append((diag[k] - x) * polys[k] - polys[k - 1])
    coeffs = tuple(tuple(float(c) for c in p.coef) for p in polys)
    return PolynomialSequence(n, float(p_left), float(p_right), coeffs)


def characteristic_roots(seq, tol=1e-10, newton_steps=5):
    """All ``n`` roots of ``p_N`` in ascending order.

    Each root is bracketed by bisection on the Sturm count down to width
    ``tol`` and then polished by at most ``newton_steps`` Newton iterations
    that are only accepted while they stay inside the bracket.
    """
    n = seq.n
    # Slightly widened so a root sitting exactly on 0 or 4 is bracketed.
    lo0, hi0 = -1e-3, 4.0 + 1e-3
    if seq.count_below(lo0) != 0 or seq.count_below(hi0) != n:
        raise NumericFailure(f"could not isolate {n} roots of p_{n} in [0, 4]")
    roots = np.empty(n)
    for i in range(n):
        # i-th root: smallest x with more than i eigenvalues below it.
        lo, hi = lo0, hi0
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if seq.count_below(mid) > i:
                hi = mid
            else:
                lo = mid
        x = 0.5 * (lo + hi)
        for _ in range(newton_steps):
            value, slope = seq.char_poly(x)
            if value == 0.0 or slope == 0.0:
                break
            step = value / slope
            if not lo <= x - step <= hi:
                break
            x -= step
            if abs(step) <= 4 * np.finfo(float).eps * max(1.0, abs(x)):
                break
        roots[i] = x
    if np.any(np.diff(roots) <= 0.0):
        raise NumericFailure("roots of the characteristic polynomial are not distinct")
    return roots


def eigenvector_from_polys(seq, lam, tol=1e-8):
    """Unit eigenvector ``(p_0(lam), ..., p_{N-1}(lam)) / norm`` for a root ``lam``."""
    values = seq.values(lam)
    scale = np.abs(values[:-1]).max()
    if abs(values[-1]) > tol * max(1.0, scale):
        raise DomainError(f"{lam!r} is not a root of p_{seq.n} (residual {values[-1]:.3e})")
    v = values[:-1] / np.linalg.norm(values[:-1])
    return fix_column_signs(v[:, None])[:, 0]

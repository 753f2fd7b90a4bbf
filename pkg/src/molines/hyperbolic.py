"""Overflow-safe ratios of hyperbolic sines.

Every solver in the package needs ``sinh(s*y) / sinh(s*b)`` for ``0 <= y <= b``
and frequencies ``s`` that can reach several hundred times ``1/b``.  The
numerator and denominator overflow individually long before the ratio does,
so the ratio is evaluated as

    exp(s*(y - b)) * expm1(-2*s*y) / expm1(-2*s*b)

which never exceeds 1 in magnitude and is accurate for small ``s`` too.
"""

import numpy as np


def sinh_ratio(s, y, b):
    """Return ``sinh(s*y) / sinh(s*b)`` elementwise for ``s >= 0``.

    ``s`` may be an array; ``y`` and ``b`` broadcast against it.  The
    ``s == 0`` limit ``y / b`` is returned exactly.
    """
    s = np.asarray(s, dtype=float)
    y = np.asarray(y, dtype=float)
    b = np.asarray(b, dtype=float)
    s, y, b = np.broadcast_arrays(s, y, b)
    out = np.empty(s.shape, dtype=float)
    zero = s == 0.0
    out[zero] = y[zero] / b[zero]
    pos = ~zero
    sp, yp, bp = s[pos], y[pos], b[pos]
    out[pos] = np.exp(sp * (yp - bp)) * np.expm1(-2.0 * sp * yp) / np.expm1(-2.0 * sp * bp)
    if out.ndim == 0:
        return float(out)
    return out


def decay_bound(s, y, b):
    """Upper bound ``exp(-s*(b - y))`` on :func:`sinh_ratio` for ``0 <= y <= b``."""
    return np.exp(-np.asarray(s, dtype=float) * (b - y))

"""Scalar helpers shared by every approximation kernel.

All kernels in this package are written against these functions so that a
single code path serves two precisions: pass a ``float`` and the whole
computation stays in fast double precision, pass an ``mpmath.mpf`` and it is
carried at the active mpmath precision. That second mode is what the
certification harness uses to measure tiny bound margins without double
rounding getting in the way.
"""

from __future__ import annotations

import math

from mpmath import mp

Scalar = float | mp.mpf


def sqrt(x):
    if isinstance(x, mp.mpf):
        return mp.sqrt(x)
    return math.sqrt(x)


def hypot(a, b):
    if isinstance(a, mp.mpf) or isinstance(b, mp.mpf):
        return mp.hypot(a, b)
    return math.hypot(a, b)


def pi_like(x):
    """pi in the flavor of x: mpf at the active precision, else float."""
    if isinstance(x, mp.mpf):
        return +mp.pi
    return math.pi


def sqrt2_like(x):
    if isinstance(x, mp.mpf):
        return mp.sqrt(mp.mpf(2))
    return math.sqrt(2.0)


def hypot1(x):
    """sqrt(1 + x^2), overflow-safe for large x (hypot never forms x*x)."""
    if isinstance(x, mp.mpf):
        return mp.hypot(mp.mpf(1), x)
    return math.hypot(1.0, x)


def reduce_arg(x):
    """Half-angle reduction u = x/(1 + sqrt(1+x^2)), mapping [0, inf) into [0, 1)."""
    return x / (1 + hypot1(x))


def isfinite(x):
    if isinstance(x, mp.mpf):
        return mp.isfinite(x)
    return math.isfinite(x)


def require_finite(x, name="x"):
    if not isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")


def require_nonnegative(x, name="x"):
    require_finite(x, name)
    if x < 0:
        raise ValueError(f"{name} must be non-negative, got {x!r}")


def require_unit(x, name="x", closed=True):
    require_finite(x, name)
    if closed:
        if not 0 <= x <= 1:
            raise ValueError(f"{name} must lie in [0, 1], got {x!r}")
    else:
        if not 0 <= x < 1:
            raise ValueError(f"{name} must lie in [0, 1), got {x!r}")

"""Closed-form arctangent bounds and the half-angle lifting operator.

The fixed-order bound families live here: the classical Shafer-Fink pair,
its order-2 strengthening, a one-off upper bound, a quadratic interpolant,
and the nested-radical sequence that the general-order machinery in
``master`` is built from. Everything is a pure function accepting a float
or an mpmath value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from mpmath import mp

from .numerics import (
    Scalar,
    hypot,
    hypot1,
    pi_like,
    reduce_arg,
    require_finite,
    require_nonnegative,
    require_unit,
    sqrt,
    sqrt2_like,
)


class BoundPair(NamedTuple):
    """A lower/upper pair enclosing arctan(x)."""

    lower: Scalar
    upper: Scalar


def _sqrt_prod(a, b):
    # sqrt(a*b), splitting the product when it could overflow in double
    if not isinstance(a, mp.mpf) and a > 1e150:
        return sqrt(a) * sqrt(b)
    return sqrt(a * b)


def shafer_fink_bounds(x) -> BoundPair:
    """Two-sided Shafer-Fink bound: 3x/(1+2*sqrt(1+x^2)) < arctan x < pi*x/(1+2*sqrt(1+x^2)).

    Strict for x > 0; both sides vanish at x = 0. The lower bound is tight
    as x -> 0, the upper bound as x -> inf.
    """
    require_nonnegative(x)
    den = 1 + 2 * hypot1(x)
    return BoundPair(3 * x / den, pi_like(x) * x / den)


def nested_radical_seq(j: int, x) -> list:
    """Values L_0..L_j of the recursion L_0 = 1, L_{k+1} = L_k + sqrt(x^2 + L_k^2).

    L_k(x) equals x/tan(arctan(x)/2^k) for x > 0 (repeated cotangent
    bisection), so the sequence is strictly increasing with L_k(0) = 2^k.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    require_nonnegative(x)
    val = x * 0 + 1.0
    out = [val]
    for _ in range(j):
        val = val + hypot(x, val)
        out.append(val)
    return out


def nested_radical_L(j: int, x):
    """L_j(x); see nested_radical_seq."""
    return nested_radical_seq(j, x)[-1]


def theorem2_bounds(x) -> BoundPair:
    """Order-2 two-sided bound: pi*(3+8*sqrt2)*f(x) < arctan x < 45*f(x).

    Here f(x) = x/(7 + 6*s + 16*sqrt2*sqrt(s^2+s)) with s = sqrt(1+x^2); the
    radical is evaluated as hypot(x, 1+s), equal since x^2+(1+s)^2 = 2s(s+1).
    The pair gap is a factor ~66 narrower than Shafer-Fink's, though neither
    side dominates its Shafer-Fink counterpart pointwise.
    """
    require_nonnegative(x)
    s = hypot1(x)
    r2 = sqrt2_like(x)
    f = x / (7 + 6 * s + 16 * hypot(x, 1 + s))
    return BoundPair(pi_like(x) * (3 + 8 * r2) * f, 45 * f)


def theorem4_upper(x):
    """Upper bound pi*x/(4/pi + sqrt2*sqrt(1 + x^2 + x*sqrt(1+x^2))).

    Tends to pi/2 as x -> inf. Not pointwise comparable with the
    Shafer-Fink upper bound: tighter only for x above ~0.711.
    """
    require_nonnegative(x)
    pi = pi_like(x)
    s = hypot1(x)
    den = 4 / pi + sqrt2_like(x) * _sqrt_prod(s, s + x)
    return pi * x / den


def lagrange_p(u):
    """Quadratic interpolant of arctan through (0, 0), (sqrt2-1, pi/8), (1, pi/4)."""
    require_unit(u, "u")
    pi = pi_like(u)
    r2 = sqrt2_like(u)
    return pi / 4 * u * (u - r2 + 1) / (2 - r2) + pi / 8 * u * (u - 1) / ((r2 - 1) * (r2 - 2))


def theorem5_approx(x):
    """The lifted interpolant in closed form; within 1/115 of arctan on all of R+.

    Equals 2*lagrange_p(x/(1+sqrt(1+x^2))) up to rounding.
    """
    require_nonnegative(x)
    pi = pi_like(x)
    r2 = sqrt2_like(x)
    s1 = 1 + hypot1(x)
    return pi * x * ((4 + r2) * s1 - r2 * x) / (8 * s1 * s1)


def lift(f: Callable, x):
    """One bisection lift: 2*f(x/(1+sqrt(1+x^2))).

    Turns an approximant valid on [0,1] into one valid on all of R+; the
    reduced argument always lies in [0,1), and lower/upper bound direction
    is preserved.
    """
    require_nonnegative(x)
    return 2 * f(reduce_arg(x))


def lift_interval_map(t):
    """Outer endpoint 2t/(1-t^2) whose lifted error matches twice the inner error on (0,t)."""
    require_finite(t, "t")
    if not 0 < t < 1:
        raise ValueError(f"t must lie in (0, 1), got {t!r}")
    return 2 * t / (1 - t * t)


@dataclass(frozen=True)
class LiftedApproximant:
    """An approximant on [0,1] lifted to R+ by repeated argument halving.

    Each application contributes one halving: value(x) = 2*inner(u) with
    u = x/(1+sqrt(1+x^2)) per lift.
    """

    inner: Callable
    lifts: int = 1

    def __post_init__(self):
        if self.lifts < 0:
            raise ValueError("lifts must be >= 0")

    def __call__(self, x):
        require_nonnegative(x)
        for _ in range(self.lifts):
            x = reduce_arg(x)
        return (1 << self.lifts) * self.inner(x)

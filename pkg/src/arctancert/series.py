"""Series-based arctangent approximants.

Four families: truncated Chebyshev expansions (plain, argument-scaled, and
lifted to R+), convergents of the Gauss continued fraction, the quartic-ratio
series around x = 1 (s_n, its reflection t_n, and their blend w_n), and the
exact-rational Machin evaluation of pi built from the same series.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from .numerics import (
    pi_like,
    reduce_arg,
    require_finite,
    require_nonnegative,
    require_unit,
    sqrt2_like,
)


def chebyshev_T(k: int, x):
    """T_k(x) by the three-term recurrence T_{k+1} = 2x*T_k - T_{k-1}."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    require_finite(x)
    if abs(x) > 1:
        raise ValueError(f"|x| must be <= 1, got {x!r}")
    prev = x * 0 + 1.0
    if k == 0:
        return prev
    cur = x
    for _ in range(k - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def _match_ratio(x):
    # default expansion ratio 1/(1+sqrt2) in the flavor of x
    return 1 / (1 + sqrt2_like(x))


def cheb_coefficients(n: int, ratio=None) -> list:
    """Coefficients c_k = 2*(-1)^k * r^(2k+1) / (2k+1) for k = 0..n.

    With the default r = 1/(1+sqrt2) these are the odd-degree Chebyshev
    coefficients of arctan on [-1,1]; magnitudes decrease strictly and
    signs alternate.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    r = _match_ratio(0.0) if ratio is None else ratio
    r2 = r * r
    out = []
    p = r
    for k in range(n + 1):
        c = 2 * p / (2 * k + 1)
        out.append(c if k % 2 == 0 else -c)
        p *= r2
    return out


def _clenshaw_odd(coeffs, x):
    # Clenshaw over degree 2n+1 with zero even coefficients; a_0 = 0.
    b1 = x * 0
    b2 = b1
    top = 2 * len(coeffs) - 1
    for j in range(top, 0, -1):
        a_j = coeffs[(j - 1) // 2] if j % 2 else 0
        b1, b2 = 2 * x * b1 - b2 + a_j, b1
    return x * b1 - b2


def cheb_arctan(n: int, x):
    """Truncated Chebyshev expansion of arctan over [-1,1], summed by Clenshaw.

    Odd in x; uniform error on [0,1] at most (1+sqrt2)^-(2n+3).
    """
    require_finite(x)
    if abs(x) > 1:
        raise ValueError(f"|x| must be <= 1, got {x!r}")
    return _clenshaw_odd(cheb_coefficients(n, _match_ratio(x)), x)


def cheb_arctan_scaled(n: int, m, x):
    """Truncated Chebyshev expansion of arctan(m*x) for |x| < 1.

    The ratio 1/(1+sqrt2) is replaced by m/(1+sqrt(1+m^2)).
    """
    require_finite(x)
    if abs(x) >= 1:
        raise ValueError(f"|x| must be < 1, got {x!r}")
    if not m > 0:
        raise ValueError(f"m must be > 0, got {m!r}")
    return _clenshaw_odd(cheb_coefficients(n, reduce_arg(m + x * 0)), x)


def cheb_lifted(n: int, x):
    """Lifted truncation 2*cheb_arctan(n, x/(1+sqrt(1+x^2))).

    Within (3+2*sqrt2)^-n of arctan over all of R+.
    """
    require_nonnegative(x)
    return 2 * cheb_arctan(n, reduce_arg(x))


def cf_arctan(n: int, x):
    """Depth-n convergent of arctan's continued fraction, by backward recurrence.

    Starting from the tail d = 2n+1, fold d = (2k-1) + k^2 x^2 / d for
    k = n..1 and return x/d. Reproduces the closed-form convergents; error
    on [0,1] at most 1/(2*4^n).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"depth n must be a positive integer, got {n!r}")
    require_finite(x)
    xx = x * x
    d = x * 0 + (2 * n + 1)
    for k in range(n, 0, -1):
        d = (2 * k - 1) + k * k * xx / d
    return x / d


def cf_lifted(n: int, x):
    """Lifted convergent 2*cf_arctan(n, x/(1+sqrt(1+x^2))); error <= 4^-n on R+."""
    require_nonnegative(x)
    return 2 * cf_arctan(n, reduce_arg(x))


def _check_trunc(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"truncation index n must be >= 0, got {n!r}")


def taylor1_s(n: int, u):
    """Partial sum s_n of the quartic-ratio series for arctan u on [0,1].

    s_n(u) = sum_{j<=n} q^j * (g/(4j+1) + 2g^2/(4j+2) + 2g^3/(4j+3)) with
    g = u/(u+1) and q = -4g^4. Pointwise error at most (sqrt2*u/(u+1))^(4n);
    an upper bound of arctan for even n, a lower bound for odd n.
    """
    _check_trunc(n)
    require_unit(u, "u")
    g = u / (u + 1)
    g2 = g * g
    g3 = g2 * g
    q = -4 * g2 * g2
    acc = u * 0
    qj = u * 0 + 1.0
    for j in range(n + 1):
        acc += qj * (g / (4 * j + 1) + 2 * g2 / (4 * j + 2) + 2 * g3 / (4 * j + 3))
        qj *= q
    return acc


def taylor1_t(n: int, u):
    """Reflected partial sum t_n(u) = pi/4 - s_n((1-u)/(1+u)), in expanded form.

    Evaluated directly as pi/4 minus the (1-u)-power series; agrees with the
    composed form to rounding. t_n(1) = pi/4 exactly; pointwise error at most
    ((1-u)/sqrt2)^(4n). Bound direction is opposite to s_n's: a lower bound
    for even n, an upper bound for odd n.
    """
    _check_trunc(n)
    require_unit(u, "u")
    om = 1 - u
    om2 = om * om
    om3 = om2 * om
    q = -om2 * om2 / 4
    acc = u * 0
    qj = u * 0 + 1.0
    for j in range(n + 1):
        acc += qj * (om / (2 * (4 * j + 1)) + om2 / (2 * (4 * j + 2)) + om3 / (4 * (4 * j + 3)))
        qj *= q
    return pi_like(u) / 4 - acc


def taylor1_t_from_s(n: int, u):
    """The composed form pi/4 - s_n((1-u)/(1+u)); regression anchor for taylor1_t."""
    _check_trunc(n)
    require_unit(u, "u")
    return pi_like(u) / 4 - taylor1_s(n, (1 - u) / (1 + u))


def blend_w(n: int, u):
    """Weighted blend of s_n and t_n with weights u^(4n+4) and (1-u)^(4n+4).

    A convex combination, so it inherits whichever bound direction the pair
    shares; uniform error on [0,1] at most 20^-n.
    """
    _check_trunc(n)
    require_unit(u, "u")
    p = 4 * n + 4
    wu = u**p
    wv = (1 - u) ** p
    return (wu * taylor1_t(n, u) + wv * taylor1_s(n, u)) / (wu + wv)


def blend_w_lifted(n: int, x):
    """Lifted blend 2*blend_w(n, x/(1+sqrt(1+x^2))); error <= 2*20^-n on R+."""
    require_nonnegative(x)
    return 2 * blend_w(n, reduce_arg(x))


def arctan_recip_series(t, n: int):
    """Depth-n partial sum for arctan(1/t), t >= 1; term ratio -4/(t+1)^4."""
    _check_trunc(n)
    require_finite(t, "t")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t!r}")
    g = 1 / (t + 1)
    g2 = g * g
    g3 = g2 * g
    q = -4 * g2 * g2
    acc = g * 0
    qj = g * 0 + 1.0
    for j in range(n + 1):
        acc += qj * (g / (4 * j + 1) + 2 * g2 / (4 * j + 2) + 2 * g3 / (4 * j + 3))
        qj *= q
    return acc


@lru_cache(maxsize=None)
def machin_pi_fraction(terms: int) -> Fraction:
    """Exact rational truncation of the two-series Machin evaluation of pi.

    pi = 16*arctan(1/5) - 4*arctan(1/239) with both arctangents expanded by
    the quartic-ratio series; row j of the dominant series carries a factor
    (-1/324)^j, the other (-1/829440000)^j. Keeping the accumulation in
    rational arithmetic leaves rounding out of the digit comparisons.
    """
    if not isinstance(terms, int) or terms < 1:
        raise ValueError(f"terms must be a positive integer, got {terms!r}")
    acc = Fraction(0)
    p1 = Fraction(1)
    p2 = Fraction(1)
    q1 = Fraction(-1, 324)
    q2 = Fraction(-1, 829440000)
    for j in range(terms):
        row1 = (
            Fraction(1, 3 * (4 * j + 1))
            + Fraction(1, 9 * (4 * j + 2))
            + Fraction(1, 54 * (4 * j + 3))
        )
        row2 = (
            Fraction(1, 60 * (4 * j + 1))
            + Fraction(1, 7200 * (4 * j + 2))
            + Fraction(1, 1728000 * (4 * j + 3))
        )
        acc += 8 * p1 * row1 - p2 * row2
        p1 *= q1
        p2 *= q2
    return acc


def machin_pi(terms: int, dps: int = 50):
    """machin_pi_fraction rounded to an mpf at dps digits."""
    v = machin_pi_fraction(terms)
    with mp.workdps(dps):
        return mp.mpf(v.numerator) / v.denominator

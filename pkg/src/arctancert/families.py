"""Registry of the approximation families exposed to the CLI and the table.

Each family gets an identifier, a reference label, its claimed bound, a
domain, and a way to build a callable evaluator. Evaluators accept floats or
mpf values like the underlying kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import core, master, series
from .verify import BoundKind

_SQRT2 = math.sqrt(2)

_PAIR_FAMILIES = ("sf", "t2", "master")


@dataclass(frozen=True)
class FamilyInfo:
    ident: str
    reference: str
    bound_text: str
    domain_text: str
    kind: BoundKind
    needs_n: bool
    n_min: int = 0
    claim_interval: str = "0:inf"  # where the claimed bound applies


FAMILIES: dict[str, FamilyInfo] = {
    info.ident: info
    for info in (
        FamilyInfo("sf", "Theorem 1", "3x/d < arctan x < πx/d, d = 1+2√(1+x²)", "[0,∞)", BoundKind.TWO_SIDED, False),
        FamilyInfo("t2", "Theorem 2", "π(3+8√2)f < arctan x < 45f", "[0,∞)", BoundKind.TWO_SIDED, False),
        FamilyInfo("t4", "Theorem 4", "arctan x < πx/(4/π+√2√(1+x²+x√(1+x²)))", "[0,∞)", BoundKind.UPPER, False),
        FamilyInfo("master", "Theorem 3", "K_high−K_low < 4^-n", "[0,∞)", BoundKind.TWO_SIDED, True, 1),
        FamilyInfo("lagrange", "Lagrange interpolant", "sup < 1/230 on (0,1)", "[0,1]", BoundKind.APPROXIMATION, False, 0, "0:1"),
        FamilyInfo("t5", "Theorem 5", "sup < 1/115", "[0,∞)", BoundKind.APPROXIMATION, False),
        FamilyInfo("cheb", "Chebyshev series", "(1+√2)^-(2n+3) on [0,1]", "[-1,1]", BoundKind.APPROXIMATION, True, 0, "0:1"),
        FamilyInfo("cheb-lifted", "Theorem 6", "(3+2√2)^-n", "[0,∞)", BoundKind.APPROXIMATION, True, 1),
        FamilyInfo("cf", "continued fraction", "1/(2·4^n) on [0,1]", "[0,1]", BoundKind.APPROXIMATION, True, 1, "0:1"),
        FamilyInfo("cf-lifted", "continued fraction, lifted", "4^-n", "[0,∞)", BoundKind.APPROXIMATION, True, 1),
        FamilyInfo("s", "series at x=1", "(√2·u/(u+1))^(4n) pointwise", "[0,1]", BoundKind.APPROXIMATION, True, 0, "0:1"),
        FamilyInfo("t", "series at x=1, reflected", "((1−u)/√2)^(4n) pointwise", "[0,1]", BoundKind.APPROXIMATION, True, 0, "0:1"),
        FamilyInfo("w", "blended series at x=1", "20^-n", "[0,1]", BoundKind.APPROXIMATION, True, 0, "0:1"),
        FamilyInfo("w-lifted", "blended series, lifted", "2·20^-n", "[0,∞)", BoundKind.APPROXIMATION, True, 0),
    )
}


def family_info(ident: str) -> FamilyInfo:
    try:
        return FAMILIES[ident]
    except KeyError:
        raise ValueError(f"unknown family {ident!r}; see the 'list' command") from None


def claimed_sup_bound(ident: str, n: Optional[int]) -> Optional[float]:
    """The family's claimed uniform error bound, when it has one."""
    if ident == "lagrange":
        return 1 / 230
    if ident == "t5":
        return 1 / 115
    if ident == "cheb":
        return (1 + _SQRT2) ** -(2 * n + 3)
    if ident == "cheb-lifted":
        return (3 + 2 * _SQRT2) ** -n
    if ident == "cf":
        return 0.5 * 4.0**-n
    if ident == "cf-lifted":
        return 4.0**-n
    if ident in ("s", "t"):
        return 4.0**-n  # pointwise envelope peaks at 4^-n
    if ident == "w":
        return 20.0**-n
    if ident == "w-lifted":
        return 2 * 20.0**-n
    return None


@dataclass(frozen=True)
class Approximant:
    """Descriptor of one family instance, callable at either precision.

    Pair families (sf, t2, master) need a side; cheb accepts an optional
    scale m, in which case it approximates arctan(m*x).
    """

    family: str
    n: Optional[int] = None
    m: Optional[float] = None
    side: Optional[str] = None

    def __post_init__(self):
        info = family_info(self.family)
        if info.needs_n:
            if self.n is None:
                raise ValueError(f"family {self.family!r} requires n")
            if not isinstance(self.n, int) or self.n < info.n_min:
                raise ValueError(f"family {self.family!r} needs integer n >= {info.n_min}")
        elif self.n is not None:
            raise ValueError(f"family {self.family!r} does not take n")
        if self.family in _PAIR_FAMILIES:
            if self.side not in ("lower", "upper"):
                raise ValueError(f"family {self.family!r} needs side 'lower' or 'upper'")
        elif self.side is not None:
            raise ValueError(f"family {self.family!r} does not take a side")
        if self.m is not None:
            if self.family != "cheb":
                raise ValueError("parameter m only applies to family 'cheb'")
            if not self.m > 0:
                raise ValueError(f"m must be > 0, got {self.m!r}")

    @property
    def label(self) -> str:
        parts = [self.family]
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.m is not None:
            parts.append(f"m={self.m:g}")
        body = parts[0] if len(parts) == 1 else f"{parts[0]}({', '.join(parts[1:])})"
        return f"{body}.{self.side}" if self.side else body

    def oracle_target(self, x):
        """The argument whose arctangent this approximant targets."""
        return self.m * x if self.m is not None else x

    def __call__(self, x):
        fam = self.family
        if fam == "sf":
            return getattr(core.shafer_fink_bounds(x), self.side)
        if fam == "t2":
            return getattr(core.theorem2_bounds(x), self.side)
        if fam == "master":
            return getattr(master.master_bounds(self.n, x), self.side)
        if fam == "t4":
            return core.theorem4_upper(x)
        if fam == "lagrange":
            return core.lagrange_p(x)
        if fam == "t5":
            return core.theorem5_approx(x)
        if fam == "cheb":
            if self.m is not None and self.m != 1:
                return series.cheb_arctan_scaled(self.n, self.m, x)
            return series.cheb_arctan(self.n, x)
        if fam == "cheb-lifted":
            return series.cheb_lifted(self.n, x)
        if fam == "cf":
            return series.cf_arctan(self.n, x)
        if fam == "cf-lifted":
            return series.cf_lifted(self.n, x)
        if fam == "s":
            return series.taylor1_s(self.n, x)
        if fam == "t":
            return series.taylor1_t(self.n, x)
        if fam == "w":
            return series.blend_w(self.n, x)
        if fam == "w-lifted":
            return series.blend_w_lifted(self.n, x)
        raise AssertionError(f"unhandled family {fam!r}")


def bound_pair(ident: str, n: Optional[int], x):
    """Evaluate a two-sided family as a (lower, upper) pair."""
    if ident == "sf":
        return core.shafer_fink_bounds(x)
    if ident == "t2":
        return core.theorem2_bounds(x)
    if ident == "master":
        return master.master_bounds(n, x)
    raise ValueError(f"family {ident!r} is not two-sided")


def _pair_order(ident: str, n: Optional[int]) -> int:
    return {"sf": 1, "t2": 2}.get(ident, n or 1)


def table_entry(ident: str, n: Optional[int]):
    """(approximant, claimed_bound, row kind) for one certification-table row.

    Approximation families report their claimed uniform bound. Two-sided
    families report the error of the best-constant side, the one whose
    constant is g_n(pi/2): exact at both ends of the domain, with sup error
    below (k_high - k_low)*(pi/2)/k_low, which shrinks like 4^-n. The
    one-sided upper bound carries no uniform claim.
    """
    info = family_info(ident)
    if info.kind is BoundKind.APPROXIMATION:
        return Approximant(ident, n=n), claimed_sup_bound(ident, n), BoundKind.APPROXIMATION
    if info.kind is BoundKind.UPPER:
        return Approximant(ident, n=n), None, BoundKind.UPPER
    order = _pair_order(ident, n)
    params = master.master_params(order)
    side = "upper" if order % 2 else "lower"  # the g-constant side
    claim = float(params.k_high - params.k_low) * (math.pi / 2) / float(params.k_low)
    return Approximant(ident, n=n, side=side), claim, BoundKind.APPROXIMATION


def list_rows() -> list:
    """One formatted line per family: ident, reference, claimed bound, domain."""
    rows = []
    for info in FAMILIES.values():
        rows.append(f"{info.ident:<12}  {info.reference:<28}  {info.bound_text:<44}  {info.domain_text}")
    return rows

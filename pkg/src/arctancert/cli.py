"""Command-line front end.

Subcommands: ``list`` (family metadata), ``eval`` (evaluate one family at a
point against the oracle), ``certify`` (run a bound/sup-norm certification),
``table`` (CSV error table over families and orders), ``pi`` (Machin-series
pi against the oracle's internal value).

Exit codes: 0 all certifications satisfied, 1 at least one violated,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from mpmath import mp

from .families import Approximant, FAMILIES, bound_pair, claimed_sup_bound, family_info, list_rows, table_entry
from .series import machin_pi
from .verify import (
    BoundKind,
    DEFAULT_GRID,
    ErrorReport,
    Interval,
    certify_bound,
    default_config,
    oracle_arctan,
    oracle_pi,
    sup_error,
)

CSV_HEADER = "family,n,interval,sup_error,arg_max,claimed_bound,satisfied"


def _sci(v: float) -> str:
    return f"{v:.16e}"


def _opt(v) -> str:
    return "" if v is None else _sci(v)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _signed_oracle(x: float, cfg):
    if x < 0:
        return -oracle_arctan(-x, cfg)
    return oracle_arctan(x, cfg)


def _parse_interval(text: str) -> Interval:
    iv = Interval.parse(text)
    # open at zero (all families are exact there) and at infinity
    return Interval(iv.lo, iv.hi, lo_open=iv.lo == 0.0, hi_open=iv.unbounded)


def _parse_params(items) -> dict:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"parameter must look like key=value, got {item!r}")
        if key != "m":
            raise ValueError(f"unknown parameter {key!r} (supported: m)")
        out["m"] = float(val)
    return out


def _require_n(ident: str, n):
    info = family_info(ident)
    if info.needs_n and n is None:
        raise ValueError(f"family {ident!r} requires --n")
    if not info.needs_n and n is not None:
        raise ValueError(f"family {ident!r} does not take --n")


def cmd_list(args) -> int:
    for row in list_rows():
        print(row)
    return 0


def cmd_eval(args) -> int:
    ident = args.family
    info = family_info(ident)
    _require_n(ident, args.n)
    params = _parse_params(args.param)
    cfg = default_config()
    x = args.x

    rows = []  # (side, value, target oracle)
    if info.kind is BoundKind.TWO_SIDED:
        pair = bound_pair(ident, args.n, x)
        ref = float(_signed_oracle(x, cfg))
        rows.append(("lower", pair.lower, ref))
        rows.append(("upper", pair.upper, ref))
    else:
        approx = Approximant(ident, n=args.n, m=params.get("m"))
        value = approx(x)
        ref = float(_signed_oracle(approx.oracle_target(x), cfg))
        side = "upper" if info.kind is BoundKind.UPPER else ""
        rows.append((side, value, ref))

    if args.format == "csv":
        print("family,n,x,side,value,oracle,signed_error")
        for side, value, ref in rows:
            n_txt = "" if args.n is None else str(args.n)
            print(f"{ident},{n_txt},{_sci(x)},{side},{_sci(value)},{_sci(ref)},{_sci(value - ref)}")
    else:
        print(f"family  {ident}" + (f"  n={args.n}" if args.n is not None else ""))
        print(f"x       {x:.17g}")
        print(f"oracle  {rows[0][2]:.17g}")
        for side, value, ref in rows:
            tag = f"{side:<6}" if side else "value "
            print(f"{tag}  {value:.17g}   error {value - ref:+.6e}")
    return 0


def _print_report(r: ErrorReport, grid: int, as_csv: bool) -> None:
    if as_csv:
        print(CSV_HEADER)
        print(_csv_row(r))
        return
    print(f"family       {r.family}")
    print(f"interval     {r.interval}")
    print(f"kind         {r.bound_kind.value}")
    print(f"grid         {grid}")
    print(f"sup_error    {_sci(r.sup_error)}  at x = {r.arg_max:.17g}")
    if r.claimed_bound is not None:
        print(f"claimed      {_sci(r.claimed_bound)}")
    if not math.isnan(r.min_gap):
        print(f"min_gap      {_sci(r.min_gap)}")
    print(f"satisfied    {_flag(r.satisfied)}")


def cmd_certify(args) -> int:
    ident = args.family
    info = family_info(ident)
    _require_n(ident, args.n)
    interval = _parse_interval(args.interval)
    cfg = default_config()

    reports = []
    if args.kind is not None:
        kind = BoundKind(args.kind)
        side = args.kind if info.kind is BoundKind.TWO_SIDED else None
        approx = Approximant(ident, n=args.n, side=side)
        reports.append(certify_bound(approx, kind, interval, args.grid, cfg=cfg))
    elif info.kind is BoundKind.TWO_SIDED:
        for side in ("lower", "upper"):
            approx = Approximant(ident, n=args.n, side=side)
            reports.append(certify_bound(approx, BoundKind(side), interval, args.grid, cfg=cfg))
    elif info.kind is BoundKind.UPPER:
        reports.append(certify_bound(Approximant(ident, n=args.n), BoundKind.UPPER, interval, args.grid, cfg=cfg))
    else:
        approx = Approximant(ident, n=args.n)
        claim = claimed_sup_bound(ident, args.n)
        reports.append(sup_error(approx, interval, args.grid, cfg=cfg, claimed_bound=claim))

    if args.format == "csv":
        print(CSV_HEADER)
        for r in reports:
            print(_csv_row(ident, args.n, r))
    else:
        for i, r in enumerate(reports):
            if i:
                print()
            _print_report(r, args.grid, as_csv=False)
    return 0 if all(r.satisfied for r in reports) else 1


def _parse_family_specs(text: str) -> list:
    specs = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        ident, sep, rng = item.partition(":")
        info = family_info(ident)
        if not sep:
            if info.needs_n:
                raise ValueError(f"family {ident!r} needs an order: use {ident}:a..b")
            specs.append((ident, None))
            continue
        if not info.needs_n:
            raise ValueError(f"family {ident!r} does not take an order range")
        lo, sep2, hi = rng.partition("..")
        try:
            a = int(lo)
            b = int(hi) if sep2 else a
        except ValueError:
            raise ValueError(f"bad order range {rng!r} in {item!r}") from None
        if b < a:
            raise ValueError(f"empty order range {rng!r}")
        specs.extend((ident, n) for n in range(a, b + 1))
    if not specs:
        raise ValueError("no families given")
    return specs


def _csv_row(ident: str, n, r: ErrorReport) -> str:
    n_txt = "" if n is None else str(n)
    return ",".join(
        (
            ident,
            n_txt,
            str(r.interval),
            _sci(r.sup_error),
            _sci(r.arg_max),
            _opt(r.claimed_bound),
            _flag(r.satisfied),
        )
    )


def cmd_table(args) -> int:
    specs = _parse_family_specs(args.families)
    shared = _parse_interval(args.interval) if args.interval else None
    cfg = default_config()

    rows = []
    ok = True
    for ident, n in sorted(specs, key=lambda s: (s[0], -1 if s[1] is None else s[1])):
        # without an explicit interval each family is measured where its claim holds
        interval = shared or _parse_interval(family_info(ident).claim_interval)
        approx, claim, row_kind = table_entry(ident, n)
        if row_kind is BoundKind.UPPER:
            # no uniform claim; the row's verdict is the direction check
            report = certify_bound(approx, BoundKind.UPPER, interval, args.grid, cfg=cfg)
        else:
            report = sup_error(approx, interval, args.grid, cfg=cfg, claimed_bound=claim)
        ok = ok and report.satisfied
        rows.append(_csv_row(ident, n, report))

    payload = "\n".join([CSV_HEADER, *rows]) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0 if ok else 1


def cmd_pi(args) -> int:
    cfg = default_config()
    if args.terms < 1:
        raise ValueError("--terms must be >= 1")
    if not 1 <= args.digits <= cfg.report_digits:
        raise ValueError(f"--digits must lie in [1, {cfg.report_digits}]")
    value = machin_pi(args.terms, dps=cfg.working_digits)
    with mp.workdps(cfg.working_digits):
        err = abs(value - oracle_pi(cfg))
        print(f"pi({args.digits} digits, {args.terms} terms) = {mp.nstr(value, args.digits)}")
        print(f"abs error vs oracle pi: {mp.nstr(err, 3)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arctancert",
        description="Evaluate arctangent approximation families and certify their error bounds.",
    )
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("list", help="list families, references, claimed bounds, domains")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("eval", help="evaluate one family at a point")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--param", action="append", metavar="KEY=VALUE")
    sp.add_argument("--format", choices=("text", "csv"), default="text")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("certify", help="certify a bound direction or sup-norm claim")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--interval", required=True, metavar="LO:HI")
    sp.add_argument("--kind", choices=("lower", "upper"))
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--format", choices=("text", "csv"), default="text")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("table", help="emit a CSV error table")
    sp.add_argument("--families", required=True, metavar="FAM[:A..B][,...]")
    sp.add_argument("--interval", metavar="LO:HI", help="shared interval (default: each family's claim domain)")
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--output", metavar="PATH")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("pi", help="Machin-series pi against the oracle")
    sp.add_argument("--terms", type=int, default=12)
    sp.add_argument("--digits", type=int, default=30)
    sp.set_defaults(func=cmd_pi)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

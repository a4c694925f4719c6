"""Command-line front end: compute objects and run the verification suites,
with canonical text or structured JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degenerate
normalization encountered (fallback used).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

import superbc
from superbc.exactalg import scalar_text
from superbc.interpbc import (
    DegenerateNormalization,
    PROPERTIES,
    VerifySpec,
    derive_k,
    expansion_identity,
    grid_point,
    interpolation_J,
    k_mu,
    verify_properties,
)
from superbc.partitions import HookParams, NotAHook, Partition, enumerate_hooks, sort_key
from superbc.superpoly import super_jack
from superbc.symmfunc import jack_P, load_jack_cache, save_jack_cache

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/2 or -3, got {text!r}")
    return Fraction(text)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {err}")


def _coeff_record(c) -> dict:
    c = Fraction(c) if not isinstance(c, Fraction) else c
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _symfun_records(f) -> dict:
    terms = [
        {"partition": str(lam), "coefficient": _coeff_record(c)}
        for lam, c in sorted(f.coeffs.items(), key=lambda kv: sort_key(kv[0]))
    ]
    return {"basis": "p", "terms": terms}


def _symfun_text(f) -> str:
    if not f.coeffs:
        return "0"
    bits = []
    for lam, c in sorted(f.coeffs.items(), key=lambda kv: sort_key(kv[0])):
        cs = scalar_text(c)
        piece = f"p[{lam}]" if cs == "1" else (f"-p[{lam}]" if cs == "-1" else f"{cs}*p[{lam}]")
        bits.append(piece)
    text = bits[0]
    for piece in bits[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superbc",
        description="Exact hook-partition, super Jack, and type BC interpolation calculator.",
    )
    parser.add_argument("--version", action="version", version=f"superbc {superbc.__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--cache", default=None, metavar="PATH",
                        help="jack expansion cache file (or set SUPERBC_CACHE)")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hooks", parents=[common], help="enumerate (p, q)-hook partitions")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--size", type=_nonnegative, help="exact size")
    group.add_argument("--max-size", type=_nonnegative, help="all sizes up to the bound")
    sp.set_defaults(func=_cmd_hooks)

    sp = sub.add_parser("jack", parents=[common], help="Jack symmetric function in the power-sum basis")
    sp.add_argument("--mu", type=_partition, required=True)
    sp.add_argument("--theta", type=_rational, default=Fraction(1))
    sp.set_defaults(func=_cmd_jack)

    sp = sub.add_parser("superjack", parents=[common], help="super Jack polynomial")
    sp.add_argument("--mu", type=_partition, required=True)
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--theta", type=_rational, default=Fraction(1))
    sp.set_defaults(func=_cmd_superjack)

    sp = sub.add_parser("grid", parents=[common], help="shifted evaluation point of a partition")
    sp.add_argument("--lambda", dest="lam", type=_partition, required=True)
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.set_defaults(func=_cmd_grid)

    sp = sub.add_parser("interp", parents=[common], help="type BC interpolation polynomial")
    sp.add_argument("--mu", type=_partition, required=True)
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--mode", choices=("paper", "top"), default=None,
                    help="normalization mode; defaults to paper with top fallback")
    sp.set_defaults(func=_cmd_interp)

    sp = sub.add_parser("kmu", parents=[common], help="hook-product constant")
    sp.add_argument("--mu", type=_partition, required=True)
    sp.add_argument("--p", type=_positive, default=None)
    sp.add_argument("--q", type=_positive, default=None)
    sp.set_defaults(func=_cmd_kmu)

    sp = sub.add_parser("expand", parents=[common], help="expand powers of the quadratic power sum")
    sp.add_argument("--size", type=_nonnegative, required=True)
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.set_defaults(func=_cmd_expand)

    sp = sub.add_parser("verify", parents=[common], help="run an exact verification suite")
    sp.add_argument("property", choices=PROPERTIES + ("all",))
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--max-size", type=_nonnegative, default=3)
    sp.add_argument("--window", type=_nonnegative, default=2)
    sp.set_defaults(func=_cmd_verify)

    return parser


def _cmd_hooks(args):
    hp = HookParams(args.p, args.q)
    if args.size is not None:
        hooks = enumerate_hooks(hp, args.size, "exact")
    else:
        hooks = enumerate_hooks(hp, args.max_size, "upto")
    result = {"partitions": [str(lam) for lam in hooks]}
    return 0, result, [str(lam) for lam in hooks]


def _cmd_jack(args):
    f = jack_P(args.mu, args.theta)
    result = {"mu": str(args.mu), "theta": str(args.theta), "symfun": _symfun_records(f)}
    return 0, result, [f"P[{args.mu}](theta={args.theta}) = {_symfun_text(f)}"]


def _cmd_superjack(args):
    hp = HookParams(args.p, args.q)
    poly = super_jack(args.mu, hp, args.theta)
    result = {
        "mu": str(args.mu),
        "p": args.p,
        "q": args.q,
        "theta": str(args.theta),
        "polynomial": poly.to_record(),
    }
    return 0, result, [poly.to_text()]


def _cmd_grid(args):
    hp = HookParams(args.p, args.q)
    point = grid_point(args.lam, hp)
    coords = [scalar_text(c) for c in point.coords]
    result = {"lambda": str(args.lam), "p": args.p, "q": args.q, "coordinates": coords}
    return 0, result, ["(" + ", ".join(coords) + ")"]


def _interp_result(j) -> dict:
    return {
        "mu": str(j.mu),
        "p": j.hp.p,
        "q": j.hp.q,
        "mode": j.mode,
        "polynomial": j.poly.to_record(),
        "normalization_value": scalar_text(j.normalization_value),
        "measured_top_coefficient": scalar_text(j.measured_top_coefficient),
        "degenerate_normalization": j.degenerate_normalization,
        "extended_grid_used": j.extended_grid_used,
        "coefficients": [
            {"partition": str(nu), "coefficient": _coeff_record(c)} for nu, c in j.coefficients
        ],
    }


def _interp_lines(j) -> list:
    return [
        f"J[{j.mu}] = {j.poly.to_text()}",
        f"mode = {j.mode}",
        f"normalization_value = {scalar_text(j.normalization_value)}",
        f"measured_top_coefficient = {scalar_text(j.measured_top_coefficient)}",
        f"degenerate_normalization = {str(j.degenerate_normalization).lower()}",
        f"extended_grid_used = {str(j.extended_grid_used).lower()}",
    ]


def _cmd_interp(args):
    hp = HookParams(args.p, args.q)
    code = 0
    if args.mode is None:
        try:
            j = interpolation_J(args.mu, hp, "paper")
        except DegenerateNormalization:
            j = interpolation_J(args.mu, hp, "top")
            code = 3
    else:
        try:
            j = interpolation_J(args.mu, hp, args.mode)
        except DegenerateNormalization as err:
            result = {"error": "degenerate-normalization", "detail": str(err)}
            return 3, result, [f"degenerate normalization: {err}"]
    return code, _interp_result(j), _interp_lines(j)


def _cmd_kmu(args):
    if (args.p is None) != (args.q is None):
        raise ValueError("--p and --q must be given together")
    k = k_mu(args.mu)
    result = {"mu": str(args.mu), "k": scalar_text(k)}
    lines = [f"k[{args.mu}] = {scalar_text(k)}"]
    if args.p is not None:
        hp = HookParams(args.p, args.q)
        kd = derive_k(args.mu, hp)
        result.update({"p": args.p, "q": args.q, "k_derived": scalar_text(kd)})
        lines.append(f"k_derived[{args.mu}] at (p, q) = ({args.p}, {args.q}) = {scalar_text(kd)}")
    return 0, result, lines


def _cmd_expand(args):
    hp = HookParams(args.p, args.q)
    report = expansion_identity(args.size, hp)
    entries = [
        {
            "partition": str(en.nu),
            "coefficient": _coeff_record(en.coefficient),
            "hook_product": _coeff_record(en.hook_product),
            "direct": en.direct,
            "reciprocal": en.reciprocal,
        }
        for en in report.entries
    ]
    result = {
        "m": report.m,
        "p": args.p,
        "q": args.q,
        "orientation": report.orientation,
        "entries": entries,
    }
    lines = [
        f"nu=({en.nu}) e={scalar_text(en.coefficient)} C={scalar_text(en.hook_product)} "
        f"direct={str(en.direct).lower()} reciprocal={str(en.reciprocal).lower()}"
        for en in report.entries
    ]
    lines.append(f"orientation: {report.orientation}")
    return 0, result, lines


def _cmd_verify(args):
    hp = HookParams(args.p, args.q)
    report = verify_properties(VerifySpec(args.property, hp, args.max_size, args.window))
    return report.exit_code, report.record(), report.text_lines()


def _invocation(args) -> dict:
    skip = {"func", "format", "cache"}
    out = {"subcommand": args.command}
    for key, val in sorted(vars(args).items()):
        if key in skip or key == "command" or val is None:
            continue
        if isinstance(val, (Partition, Fraction)):
            val = str(val)
        out[key] = val
    return out


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = args.cache or os.environ.get("SUPERBC_CACHE")
    if cache_path and os.path.exists(cache_path):
        load_jack_cache(cache_path)
    try:
        code, result, lines = args.func(args)
    except (NotAHook, ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if cache_path:
        save_jack_cache(cache_path)
    if args.format == "structured":
        payload = {
            "tool": "superbc",
            "version": superbc.__version__,
            "invocation": _invocation(args),
            "result": result,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

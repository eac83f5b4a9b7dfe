"""Command line front end: verify, eval, enumerate, limits, all."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .. import hyperfun as hf
from .. import ozgen as oz
from .. import polylog as pl
from ..errors import ConfigError, FiniteHyperError, PoleExhaustion, UnknownIdentity
from ..exact import as_rational
from .catalog import CATALOG, RunConfig, run_all, run_identity
from .limits import DEFAULT_GRID, DEFAULT_TOL, default_limit_suite
from .reports import all_passed, emit_report, render_value

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG = 0, 1, 2


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"not an exact rational: {text!r}") from exc


def _rationals(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()] if text else []


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise ConfigError(f"not an integer: {text!r}") from exc


# name -> (required params, evaluator(params, N, z))
EVALUATORS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "truncated-zeta": (("k",), lambda p, N, z: pl.truncated_zeta(_int(p["k"]), N)),
    "truncated-mzv": (("k",), lambda p, N, z: pl.truncated_mzv(pl.parse_index(p["k"]), N)),
    "truncated-mpl": (("k",), lambda p, N, z: pl.truncated_mpl(pl.parse_index(p["k"]), z, N)),
    "tilde-zeta": (("k", "l"), lambda p, N, z: pl.tilde_zeta(pl.parse_index(p["k"]), _int(p["l"]), N)),
    "arakawa-kaneko": (("k", "l"), lambda p, N, z: pl.ak_congruence_sides(pl.parse_index(p["k"]), _int(p["l"]), N)),
    "truncated-beta": (("a", "b"), lambda p, N, z: hf.truncated_beta(hf.BetaParams(_rational(p["a"]), _rational(p["b"]), N))),
    "disc-beta": (("a", "b"), lambda p, N, z: hf.disc_beta_sum(hf.BetaParams(_rational(p["a"]), _rational(p["b"]), N))),
    "pfq-bracket": (("upper", "lower"), lambda p, N, z: hf.trunc_pFq_bracket(
        hf.HyperParams(tuple(_rationals(p["upper"])), tuple(_rationals(p["lower"])), z, N))),
    "pfq-paren": (("upper", "lower"), lambda p, N, z: hf.trunc_pFq_paren(
        _rationals(p["upper"]), _rationals(p["lower"]), z, N)),
    "t1f0": (("a",), lambda p, N, z: hf.t1F0_closed_form(_rational(p["a"]), z, N)),
    "phi0": ((), lambda p, N, z: oz.phi0_direct(oz.GenFunConfig(N, z, _int(p.get("D", "6")))).render()),
    "tilde-sum": (("k", "q", "h"), lambda p, N, z: oz.tilde_sum(_int(p["k"]), _int(p["q"]), _int(p["h"]), N)),
    "reconstruct-p": (("k", "q", "h"), lambda p, N, z: oz.reconstruct_P(_int(p["k"]), _int(p["q"]), _int(p["h"])).polynomial.render()),
}

# evaluators that need a numeric z
_NEEDS_Z = {"truncated-mpl", "pfq-bracket", "pfq-paren", "t1f0"}


def _parse_params(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"parameter must look like key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="finitehyper",
                                     description="Exact verification of truncated hypergeometric and MZV identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check one registered identity")
    v.add_argument("identity", help="identity id; one of: " + ", ".join(CATALOG))
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--degree", type=int, help="truncation degree D for series identities")
    v.add_argument("--weight-max", type=int)
    v.add_argument("--num-bound", type=int, default=20)
    v.add_argument("--den-bound", type=int, default=10)
    _output_args(v)

    e = sub.add_parser("eval", help="evaluate one function exactly")
    e.add_argument("function", choices=sorted(EVALUATORS))
    e.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE",
                   help="lists are comma separated, e.g. k=1,2 or upper=1/2,1")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--z", help="argument as p/q; omit for the symbolic z = N/(N-Y) in phi0")

    n = sub.add_parser("enumerate", help="list index sets")
    n.add_argument("kind", choices=("i0", "i0tilde"))
    n.add_argument("--k", type=int, required=True)
    group = n.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int, help="depth (i0)")
    group.add_argument("--q", type=int, help="weight minus l minus depth (i0tilde)")
    n.add_argument("--h", type=int, required=True)

    lim = sub.add_parser("limits", help="floating-point limit checks")
    lim.add_argument("--tol", type=float, default=DEFAULT_TOL)
    lim.add_argument("--n-grid", type=int, nargs="+", default=list(DEFAULT_GRID))
    _output_args(lim)

    a = sub.add_parser("all", help="every identity with default grids, then the limit suite")
    a.add_argument("--seed", type=int, default=42)
    a.add_argument("--no-limits", action="store_true")
    _output_args(a)
    return parser


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="record elapsed milliseconds (breaks byte determinism)")
    if "--tol" not in p._option_string_actions:
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="tolerance for float limit checks")


def _write(data: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        if not data.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")
        sys.stdout.flush()


def _cmd_verify(args) -> int:
    cfg = RunConfig(args.n_min, args.n_max, args.trials, args.seed, args.degree, args.weight_max,
                    args.num_bound, args.den_bound)
    reports = run_identity(args.identity, cfg)
    _write(emit_report(reports, args.format, args.timing), args.out)
    return EXIT_OK if all_passed(reports) else EXIT_MISMATCH


def _cmd_eval(args) -> int:
    required, fn = EVALUATORS[args.function]
    params = _parse_params(args.params)
    missing = [k for k in required if k not in params]
    if missing:
        raise ConfigError(f"{args.function} needs --params {' '.join(k + '=...' for k in missing)}")
    if args.function in _NEEDS_Z and args.z is None:
        raise ConfigError(f"{args.function} needs --z")
    z = _rational(args.z) if args.z is not None else None
    print(render_value(fn(params, args.n, z)))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.kind == "i0":
        if args.r is None:
            raise ConfigError("i0 takes --r")
        items = pl.enumerate_I0(args.k, args.r, args.h)
    else:
        if args.q is None:
            raise ConfigError("i0tilde takes --q")
        items = pl.enumerate_I0_tilde(args.k, args.q, args.h)
    for item in items:
        print(f"({item})")
    return EXIT_OK


def _cmd_limits(args) -> int:
    reports = default_limit_suite(sorted(args.n_grid), args.tol)
    _write(emit_report(reports, args.format), args.out)
    return EXIT_OK if all_passed(reports) else EXIT_MISMATCH


def _cmd_all(args) -> int:
    reports = list(run_all(RunConfig(seed=args.seed)))
    if not args.no_limits:
        reports.extend(default_limit_suite(DEFAULT_GRID, args.tol))
    _write(emit_report(reports, args.format, args.timing), args.out)
    return EXIT_OK if all_passed(reports) else EXIT_MISMATCH


COMMANDS = {"verify": _cmd_verify, "eval": _cmd_eval, "enumerate": _cmd_enumerate,
            "limits": _cmd_limits, "all": _cmd_all}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, UnknownIdentity, PoleExhaustion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (FiniteHyperError, ValueError) as exc:
        # bad parameters for eval/enumerate (poles, malformed indices, ...)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``gtfkit {eval,profile,verify,lyapunov}``.

Exit codes: 0 success, 1 failed verification checks, 2 bad arguments or
domain errors, 3 when a numerical method does not converge.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import bvp, gtf, lyapunov, special, verify
from .config import ConvergenceError, DomainError, NumericsConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2, 3


def _real(text: str) -> float:
    """Float parser that also accepts ``inf``; NaN is rejected."""
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isnan(v):
        raise argparse.ArgumentTypeError("nan is not allowed")
    return v


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"{args.function} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def _eval_value(args, config: NumericsConfig) -> float:
    fn = args.function
    if fn in ("sin", "cos", "asin"):
        p, q, x = _need(args, "p", "q", "x")
        f = {"sin": gtf.sin_pq, "cos": gtf.cos_pq, "asin": gtf.asin_pq}[fn]
        return f(x, gtf.ParamPair(p, q), config)
    if fn == "pi":
        p, q = _need(args, "p", "q")
        return gtf.pi_pq(gtf.ParamPair(p, q))
    if fn == "phi":
        r, x = _need(args, "r", "x")
        return bvp.phi_r(x, bvp.NonlocalProblem(r, args.H), config)
    if fn == "u":
        p, q, x = _need(args, "p", "q", "x")
        return bvp.general_solution(x, bvp.GeneralProblem(p, q, args.H), config)
    if fn == "weight":
        p, q, x = _need(args, "p", "q", "x")
        return lyapunov.extremal_weight(x, lyapunov.LyapunovInput(p, q, args.L), config)
    if fn == "2f1":
        a, b, c, x = _need(args, "a", "b", "c", "x")
        return special.gauss_2f1(special.HypArgs(a, b, c, x), config)
    if fn == "beta":
        a, b = _need(args, "a", "b")
        return special.beta(special.BetaArgs(a, b))
    a, b, x = _need(args, "a", "b", "x")
    return special.reg_inc_beta(x, special.BetaArgs(a, b), config)


def cmd_eval(args, config: NumericsConfig) -> int:
    print(f"{float(_eval_value(args, config)):.15g}")
    return EXIT_OK


def profile_csv(problem: str, args, config: NumericsConfig) -> str:
    """CSV text of a solution profile on ``n + 1`` uniform nodes of ``[0, H]``."""
    if args.n < 2:
        raise DomainError("n must be >= 2")
    if problem == "nonlocal":
        (r,) = _need(args, "r")
        prob = bvp.NonlocalProblem(r, args.H)
        x = np.linspace(0.0, prob.H, args.n + 1)
        y = np.atleast_1d(bvp.phi_r(x, prob, config))
    else:
        p, q = _need(args, "p", "q")
        prob = bvp.GeneralProblem(p, q, args.H)
        x = np.linspace(0.0, prob.H, args.n + 1)
        y = np.atleast_1d(bvp.general_solution(x, prob, config))
    rows = ["x,phi"] + [f"{a:.17g},{b:.17g}" for a, b in zip(x, y)]
    return "\n".join(rows) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_profile(args, config: NumericsConfig) -> int:
    args.function = args.problem
    _emit(profile_csv(args.problem, args, config), args.out)
    return EXIT_OK


def cmd_verify(args, config: NumericsConfig) -> int:
    report = verify.run(args.suite, args.seed, config)
    text = report.to_json() + "\n" if args.format == "json" else report.to_text() + "\n"
    _emit(text, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_lyapunov(args, config: NumericsConfig) -> int:
    inp = lyapunov.LyapunovInput(args.p, args.q, args.L)
    res = lyapunov.best_constant(inp)
    if inp.finite:
        big_q = inp.p * inp.q_star
        weight = (
            f"a_q(x) = (p-1) q* (pi/L)^p sin_{{p,pq*}}(pi x / L)^(p/(q-1)),"
            f" pq* = {big_q!r}, pi = pi_{{p,pq*}}"
        )
        print(f"m_q = {res.best_constant!r}")
        print(f"pi_{{p,pq*}} = {res.pi_inner!r}")
    else:
        weight = "a(x) = (p-1) (pi_p/L)^p, constant"
        print(f"m_q = {res.best_constant!r}")
        print(f"pi_p = {res.pi_inner!r}")
    print(f"weight: {weight}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtfkit", description="Generalized trigonometric functions toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=["sin", "cos", "asin", "pi", "phi", "u", "weight", "2f1", "beta", "ibeta"])
    for name in ("p", "q", "r", "x", "a", "b", "c"):
        ev.add_argument(f"--{name}", type=_real)
    ev.add_argument("--H", type=_real, default=1.0)
    ev.add_argument("--L", type=_real, default=1.0)
    ev.set_defaults(handler=cmd_eval)

    pr = sub.add_parser("profile", help="tabulate a boundary value problem solution as CSV")
    pr.add_argument("problem", choices=["nonlocal", "general"])
    for name in ("r", "p", "q"):
        pr.add_argument(f"--{name}", type=_real)
    pr.add_argument("--H", type=_real, default=1.0)
    pr.add_argument("--n", type=int, default=200)
    pr.add_argument("--out")
    pr.set_defaults(handler=cmd_profile)

    ve = sub.add_parser("verify", help="run a seeded verification suite")
    ve.add_argument("suite", choices=["all", *verify.SUITES])
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--format", choices=["text", "json"], default="text")
    ve.add_argument("--out")
    ve.set_defaults(handler=cmd_verify)

    ly = sub.add_parser("lyapunov", help="best Lyapunov constant and extremal weight")
    ly.add_argument("--p", type=_real, required=True)
    ly.add_argument("--q", type=_real, required=True, help="exponent of the weight norm, or inf")
    ly.add_argument("--L", type=_real, default=1.0)
    ly.set_defaults(handler=cmd_lyapunov)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = NumericsConfig.from_env()
        return args.handler(args, config)
    except ConvergenceError as exc:
        print(f"gtfkit: no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (DomainError, ValueError) as exc:
        print(f"gtfkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"gtfkit: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE

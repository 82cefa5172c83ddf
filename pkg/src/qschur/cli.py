"""Command-line harness: named verification suites and an expression evaluator.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
configuration error (bad flags, non-square q, or a degenerate specialisation
where some [k] vanishes).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction

from . import __version__, expressions, suites
from .expressions import ParseError
from .reports import VerificationReport
from .suites import SUITES, SuiteConfig

DEFAULT_Q = "16/9"
Q_ENV_VAR = "QSCHUR_Q0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


class ConfigError(ValueError):
    pass


def parse_q(text):
    """Parse --q num/den into (q0, v0); q0 must be a square of a rational."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            q0 = Fraction(int(num), int(den))
        else:
            q0 = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad q value {text!r}: {exc}") from None
    if q0 <= 0:
        raise ConfigError(f"q must be positive, got {q0}")
    rn, rd = math.isqrt(q0.numerator), math.isqrt(q0.denominator)
    if rn * rn != q0.numerator or rd * rd != q0.denominator:
        raise ConfigError(
            f"q = {q0} is not the square of a rational; half-integer powers "
            "of q need a rational v = sqrt(q)")
    return q0, Fraction(rn, rd)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qschur",
        description="Exact verification suites for the q-extended tensor "
                    "algebra and q-Schur-Weyl duality.")
    parser.add_argument("--suite", choices=sorted(SUITES) + ["all"],
                        help="verification suite to run")
    parser.add_argument("--eval", dest="eval_expr", metavar="EXPR",
                        help="evaluate an element/operator expression")
    parser.add_argument("--n", type=int, default=2,
                        help="dimension of V (default 2)")
    parser.add_argument("--p-max", type=int, default=2,
                        help="largest tensor degree (default 2)")
    parser.add_argument("--q", default=None, metavar="NUM/DEN",
                        help=f"specialisation q value (default {DEFAULT_Q}, "
                             f"env {Q_ENV_VAR})")
    parser.add_argument("--symbolic", action="store_true",
                        help="run symbolically; suites needing a "
                             "specialisation are rejected")
    parser.add_argument("--seed", type=int, default=2024,
                        help="seed for randomised samples (default 2024)")
    parser.add_argument("--samples", type=int, default=25,
                        help="number of randomised samples (default 25)")
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.add_argument("--out", default=None, help="write the report here")
    parser.add_argument("--comparable", action="store_true",
                        help="zero out timing fields for byte comparison")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.eval_expr is not None:
        return _run_eval(args)
    if args.suite is None:
        parser.print_usage(sys.stderr)
        print("qschur: one of --suite or --eval is required", file=sys.stderr)
        return EXIT_CONFIG

    try:
        cfg = _build_config(args)
    except ConfigError as exc:
        print(f"qschur: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        records = suites.run_suite(cfg)
    except ValueError as exc:
        print(f"qschur: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    report = VerificationReport(
        version=__version__,
        config={
            "suite": cfg.suite, "n": cfg.n, "p_max": cfg.p_max,
            "q0": "symbolic" if cfg.q0 is None else cfg.q0,
            "seed": cfg.seed, "samples": cfg.samples,
        },
        records=records)
    rendered = (report.to_json(args.comparable) if args.format == "json"
                else report.to_text(args.comparable))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def _build_config(args):
    if args.n < 1:
        raise ConfigError("--n must be >= 1")
    if args.p_max < 0:
        raise ConfigError("--p-max must be >= 0")
    q0 = v0 = None
    if not args.symbolic:
        qtext = args.q if args.q is not None else os.environ.get(Q_ENV_VAR,
                                                                 DEFAULT_Q)
        q0, v0 = parse_q(qtext)
    elif args.q is not None:
        raise ConfigError("--symbolic and --q are mutually exclusive")
    return SuiteConfig(suite=args.suite, n=args.n, p_max=args.p_max,
                       q0=q0, v0=v0, symbolic=args.symbolic,
                       seed=args.seed, samples=args.samples)


def _run_eval(args):
    try:
        result = expressions.evaluate(args.eval_expr, args.n)
    except ParseError as exc:
        print(f"qschur: parse error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"qschur: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.format == "json":
        import json
        print(json.dumps({"input": args.eval_expr, "n": args.n,
                          "result": str(result)}, sort_keys=True))
    else:
        print(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``varrec {eval,verify,expand,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource-cap error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .. import chainsum, recurrence, symbolic, vectorproof
from ..core import Poly
from ..errors import EvaluationError, ResourceError
from . import bench
from .problemspec import ProblemSpec, SpecError, parse_spec
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def format_scalar(value) -> str:
    if isinstance(value, Poly):
        return symbolic.render(value)
    return str(value) if not isinstance(value, float) else repr(value)


def load_spec(args) -> Optional[ProblemSpec]:
    path = getattr(args, "spec", None)
    if not path:
        return None
    try:
        with open(path, "rb") as fh:
            spec = parse_spec(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read spec: {exc}") from None
    scalar = getattr(args, "scalar", None)
    if scalar:
        spec = spec.with_scalar(scalar)
    return spec


def evaluate_rows(spec: ProblemSpec, method: str):
    p = spec.build()
    N = p.horizon
    if method == "direct":
        res = recurrence.eval_direct(p)
        return list(res.terms), list(res.prefix)
    if method == "closed":
        terms, prefix = [p.w0], [p.w0]
        for n in range(1, N + 1):
            terms.append(chainsum.term_closed_form(p, n))
            prefix.append(chainsum.prefix_sum_closed_form(p, n))
        return terms, prefix
    if N == 0:
        return [p.w0], [p.w0]
    # Level-N vector: block j sums to w_j and its first 2^n entries are the level-n vector.
    w = vectorproof.build_w(p, N)
    terms = [vectorproof.block_sum(w, j) for j in range(N + 1)]
    prefix = [vectorproof.l1(w.entries[: 1 << n]) for n in range(N + 1)]
    return terms, prefix


def cmd_eval(args) -> int:
    spec = load_spec(args)
    if spec is None:
        raise UsageError("eval needs --spec")
    if args.n is not None:
        spec = spec.with_horizon(args.n)
    terms, prefix = evaluate_rows(spec, args.method)
    print("n\tw_n\tprefix_n")
    for n, (t, s) in enumerate(zip(terms, prefix)):
        print(f"{n}\t{format_scalar(t)}\t{format_scalar(s)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_spec(args)
    problem = None
    if spec is not None:
        if spec.scalar == "float":
            raise UsageError("verify checks exact identities; use scalar 'rational' or 'symbolic'")
        problem = spec.build()
    report = run_suite(problem, trials=args.trials, max_n=args.max_n, seed=args.seed)
    print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_expand(args) -> int:
    if args.what == "v":
        print(symbolic.render(symbolic.expand_v(args.n)))
    else:
        print("\n".join(symbolic.render_grouped(symbolic.expand_w_grouped(args.n))))
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        methods = bench.parse_methods(args.methods)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = load_spec(args)
    problem = spec.build() if spec is not None else None
    rows = bench.run_bench(methods, args.max_n, args.cap, problem)
    try:
        bench.write_csv(rows, args.output)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from None
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    common.add_argument("--spec", default=argparse.SUPPRESS, help="problem specification (JSON)")
    common.add_argument("--scalar", choices=("rational", "float", "symbolic"),
                        default=argparse.SUPPRESS, help="override the spec's scalar realization")

    parser = argparse.ArgumentParser(prog="varrec", parents=[common], description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="print w_n and prefix sums")
    p.add_argument("--method", choices=("direct", "closed", "vector"), default="direct")
    p.add_argument("--n", type=int, default=None, help="override the spec horizon")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="cross-check all evaluators exactly")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", parents=[common], help="print generic symbolic expansions")
    p.add_argument("--what", choices=("v", "w"), default="v")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("bench", parents=[common], help="time and count operations to CSV")
    p.add_argument("--max-n", type=int, default=4096)
    p.add_argument("--methods", default=",".join(bench.METHODS),
                   help=f"comma-separated subset of {','.join(bench.METHODS)}")
    p.add_argument("--cap", type=int, default=16, help="largest order for exponential methods")
    p.add_argument("--output", required=True, help="CSV path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, SpecError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

"""Wall-clock and operation-count benchmarks of the evaluators."""

from __future__ import annotations

import csv
import time
from typing import Iterable, List, Tuple

from .. import chainsum, vectorproof
from ..core import FLOAT, ExprCoefficients, ExprForcing, Problem, Realization

METHODS = ("dp", "binary", "chain", "vector")
EXPONENTIAL = ("binary", "chain", "vector")
DENSE_UNTIL = 64


def default_problem(horizon: int, ring: Realization = FLOAT) -> Problem:
    """a(n, j) = 1/n, c(n) = 1, w0 = 1; bounded values for long dp runs."""
    return Problem(
        ring.one(), ExprCoefficients.parse("1/n", ring), ExprForcing.parse("1", ring), horizon
    )


def _run(method: str, n: int, p: Problem, cap: int):
    if method == "dp":
        return chainsum.phi_dp(n, p.coefficients)
    if method == "binary":
        return chainsum.phi_binary(n, p.coefficients, cap=cap)
    if method == "chain":
        return chainsum.phi_chain(n, p.coefficients, cap=cap)
    if method == "vector":
        return vectorproof.build_w(p, n, cap=cap)
    raise ValueError(f"unknown method {method!r}; valid: {', '.join(METHODS)}")


def count_ops(method: str, n: int, p: Problem, cap: int = chainsum.DEFAULT_CAP) -> int:
    """Ring additions plus multiplications spent by one evaluation."""
    counted = p.counted()
    counter = counted.ring.counter
    counter.reset()
    _run(method, n, counted, cap)
    return counter.total


def time_ns(method: str, n: int, p: Problem, cap: int = chainsum.DEFAULT_CAP) -> int:
    start = time.perf_counter_ns()
    _run(method, n, p, cap)
    return time.perf_counter_ns() - start


def schedule(method: str, max_n: int, cap: int) -> List[int]:
    """Orders to benchmark: every n up to 64, then powers of two for dp."""
    if method in EXPONENTIAL:
        return list(range(1, min(max_n, cap) + 1))
    ns = list(range(1, min(max_n, DENSE_UNTIL) + 1))
    n = DENSE_UNTIL * 2
    while n <= max_n:
        ns.append(n)
        n *= 2
    if max_n > DENSE_UNTIL and ns[-1] != max_n:
        ns.append(max_n)
    return ns


def parse_methods(text: str) -> Tuple[str, ...]:
    names = tuple(m.strip() for m in text.split(",") if m.strip())
    bad = [m for m in names if m not in METHODS]
    if not names or bad:
        raise ValueError(f"invalid --methods {text!r}; valid methods: {', '.join(METHODS)}")
    return names


def run_bench(methods: Iterable[str], max_n: int, cap: int, problem: Problem | None = None,
              progress=None):
    rows = []
    for method in methods:
        for n in schedule(method, max_n, cap):
            p = problem if problem is not None else default_problem(n)
            if p.horizon < n:
                p = Problem(p.w0, p.coefficients, p.forcing, n)
            rows.append((method, n, time_ns(method, n, p, cap), count_ops(method, n, p, cap)))
            if progress:
                progress(rows[-1])
    return rows


def write_csv(rows, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["method", "n", "nanos", "ops"])
        writer.writerows(rows)

import itertools
import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

from varrec.core import RATIONAL, Problem, TableCoefficients, TableForcing


def oracle_terms(w0, a, c, horizon):
    """w_n by summing chain products over every path to n (no recursion).

    ``a`` maps (n, j) to Fraction, ``c`` maps n to Fraction.
    """
    terms = [w0]
    for n in range(1, horizon + 1):
        total = c.get(n, Fraction(0))
        for start in range(0, n):
            weight = w0 if start == 0 else c.get(start, Fraction(0))
            between = range(start + 1, n)
            for size in range(len(between) + 1):
                for mids in itertools.combinations(between, size):
                    path = (start, *mids, n)
                    prod = weight
                    for lo, hi in zip(path, path[1:]):
                        prod *= a.get((hi, lo), Fraction(0))
                    total += prod
        terms.append(total)
    return terms


def oracle_phi(f, n):
    """1 + sum over nonempty subsets of {1..n} of edge products, via itertools."""
    total = Fraction(1)
    for size in range(1, n + 1):
        for chain in itertools.combinations(range(1, n + 1), size):
            prod = Fraction(1)
            prev = 0
            for k in chain:
                prod *= f(k, prev)
                prev = k
            total += prod
    return total


def random_data(rng, horizon):
    def r():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    w0 = r()
    a = {(n, j): r() for n in range(1, horizon + 1) for j in range(n)}
    c = {n: r() for n in range(1, horizon + 1)}
    return w0, a, c


def to_problem(w0, a, c, horizon):
    conv = lambda x: mpq(x.numerator, x.denominator)  # noqa: E731
    return Problem(
        conv(w0),
        TableCoefficients({k: conv(v) for k, v in a.items()}, RATIONAL),
        TableForcing({k: conv(v) for k, v in c.items()}, RATIONAL),
        horizon,
    )


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def make_problem(rng):
    def make(horizon):
        data = random_data(rng, horizon)
        return to_problem(*data, horizon), data

    return make


_criteria = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria[name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[2])):
        outcome, duration = _criteria[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name[len('test_'):]}  ({duration:.2f}s)")

from fractions import Fraction

import pytest
from gmpy2 import mpq

from conftest import oracle_terms, random_data, to_problem
from varrec.core import (
    RATIONAL,
    SYMBOLIC,
    ExprCoefficients,
    ExprForcing,
    GenericCoefficients,
    Poly,
    Problem,
    TableCoefficients,
    TableForcing,
    monomial,
    zero_forcing,
    A,
)
from varrec.errors import DomainError, EvaluationError
from varrec.recurrence import SequenceResult, eval_direct, eval_homogeneous_shifted


def expr_problem(a, c, w0, horizon):
    forcing = zero_forcing(RATIONAL) if c is None else ExprForcing.parse(c, RATIONAL)
    return Problem(mpq(w0), ExprCoefficients.parse(a, RATIONAL), forcing, horizon)


def test_zero_coefficients_give_forcing():
    res = eval_direct(expr_problem("0", "n^2", 7, 5))
    assert list(res.terms) == [7, 1, 4, 9, 16, 25]


def test_all_ones_homogeneous():
    res = eval_direct(expr_problem("1", None, 1, 4))
    assert list(res.terms) == [1, 1, 2, 4, 8]
    assert list(res.prefix) == [1, 2, 4, 8, 16]


def test_all_ones_forced():
    res = eval_direct(expr_problem("1", "1", 0, 3))
    assert list(res.terms) == [0, 1, 2, 4]
    assert list(res.prefix) == [0, 1, 3, 7]


def test_horizon_zero_reads_no_forcing():
    p = Problem(mpq(3), TableCoefficients({}, RATIONAL), ExprForcing.parse("1/(n-n)", RATIONAL), 0)
    assert eval_direct(p) == SequenceResult((3,), (3,))
    with pytest.raises(EvaluationError):
        eval_direct(Problem(p.w0, p.coefficients, p.forcing, 1))


@pytest.mark.parametrize("horizon", [1, 3, 6, 9])
def test_matches_path_sum_oracle(rng, horizon):
    for _ in range(5):
        w0, a, c = random_data(rng, horizon)
        got = eval_direct(to_problem(w0, a, c, horizon))
        expected = oracle_terms(w0, a, c, horizon)
        assert [Fraction(int(x.numerator), int(x.denominator)) for x in got.terms] == expected


def test_prefix_consistency(make_problem):
    p, _ = make_problem(12)
    res = eval_direct(p)
    assert res.prefix[0] == res.terms[0]
    for n in range(1, 13):
        assert res.prefix[n] == res.prefix[n - 1] + res.terms[n]
        recomputed = p.forcing.at(n)
        for j in range(n):
            recomputed += p.coefficients.at(n, j) * (res.prefix[j] - (res.prefix[j - 1] if j else 0))
        assert recomputed == res.terms[n]


def test_linearity_and_superposition(make_problem):
    p, _ = make_problem(10)
    q, _ = make_problem(10)
    zero = mpq(0)
    a = p.coefficients
    c1, c2 = p.forcing, q.forcing
    both = TableForcing({n: c1.at(n) + c2.at(n) for n in range(1, 11)}, RATIONAL)
    r1 = eval_direct(Problem(zero, a, c1, 10))
    r2 = eval_direct(Problem(zero, a, c2, 10))
    r12 = eval_direct(Problem(zero, a, both, 10))
    assert list(r12.terms) == [x + y for x, y in zip(r1.terms, r2.terms)]

    full = eval_direct(p)
    homog = eval_direct(Problem(p.w0, a, zero_forcing(RATIONAL), 10))
    assert list(full.terms) == [x + y for x, y in zip(homog.terms, r1.terms)]


def test_homogeneous_special_case(make_problem):
    p, _ = make_problem(10)
    res = eval_direct(Problem(mpq(1), p.coefficients, zero_forcing(RATIONAL), 10))
    assert list(res.terms) == eval_homogeneous_shifted(p.coefficients, 0, 10)


def test_shifted_homogeneous_symbolic_examples():
    v = eval_homogeneous_shifted(GenericCoefficients(), 0, 3)
    a = lambda n, j: Poly.symbol(A(n, j))  # noqa: E731
    assert v[0] == SYMBOLIC.one()
    assert v[1] == a(1, 0)
    assert v[2] == a(2, 0) + a(1, 0) * a(2, 1)
    assert v[3] == a(3, 0) + a(1, 0) * a(3, 1) + a(2, 0) * a(3, 2) + a(1, 0) * a(2, 1) * a(3, 2)


@pytest.mark.parametrize("shift", [0, 1, 5])
def test_shifted_length_zero(shift):
    assert eval_homogeneous_shifted(GenericCoefficients(), shift, 0) == [SYMBOLIC.one()]


def test_shift_reads_shifted_symbols():
    v = eval_homogeneous_shifted(GenericCoefficients(), 2, 2)
    assert v[1] == Poly.symbol(A(3, 2))
    assert set(v[2].monomials()) == {monomial(A(4, 2)), monomial(A(3, 2), A(4, 3))}


def test_negative_arguments():
    with pytest.raises(DomainError):
        eval_homogeneous_shifted(GenericCoefficients(), -1, 2)

import random

import pytest
from gmpy2 import mpq

from varrec.core import W0, A, C, GenericCoefficients, GenericForcing, Poly, Problem, monomial
from varrec.errors import DomainError, ResourceError
from varrec.recurrence import eval_direct
from varrec.symbolic import expand_v, expand_w_grouped, render, render_grouped

M = monomial


def test_expand_v_small():
    assert set(expand_v(1).monomials()) == {M(A(1, 0))}
    assert set(expand_v(2).monomials()) == {M(A(2, 0)), M(A(1, 0), A(2, 1))}


def test_render_examples():
    assert render(expand_v(2)) == "a[2,0] + a[1,0]*a[2,1]"
    assert render(expand_v(1)) == "a[1,0]"
    assert render(Poly()) == "0"
    assert render(Poly.constant(1)) == "1"


def test_render_signs_and_coefficients():
    p = Poly({(A(1, 0),): mpq(-1), (): mpq(3, 2), (C(2), W0): mpq(-4)})
    assert render(p) == "3/2 - a[1,0] - 4*c[2]*w0"
    assert render(-Poly.constant(1)) == "-1"


def test_monomial_counts():
    for n in range(1, 11):
        v = expand_v(n)
        assert len(v) == 2 ** (n - 1)
        assert set(v.terms.values()) == {1}
    g = expand_w_grouped(7)
    for l in range(1, 7):
        assert len(g.group(C(l))) == 2 ** (7 - l - 1)


def test_grouped_order_and_reassembly():
    for n in range(1, 7):
        g = expand_w_grouped(n)
        carriers = [sym for sym, _ in g.groups]
        assert carriers == [C(l) for l in range(n, 0, -1)] + [W0]
        assert g.group(C(n)) == Poly.constant(1)
        assert g.group(W0) == expand_v(n)
        p = Problem(Poly.symbol(W0), GenericCoefficients(), GenericForcing(), n)
        assert g.reassemble() == eval_direct(p).terms[n]


def test_grouped_n1():
    g = expand_w_grouped(1)
    assert render_grouped(g) == ["c[1]: 1", "w0: a[1,0]"]


def test_caps_and_domain():
    with pytest.raises(ResourceError):
        expand_v(17)
    with pytest.raises(ResourceError):
        expand_w_grouped(5, cap=4)
    with pytest.raises(DomainError):
        expand_v(0)


def test_render_is_injective_on_random_polys():
    rng = random.Random(7)
    syms = [A(n, j) for n in range(1, 4) for j in range(n)] + [C(1), C(2), W0]
    seen = {}
    for _ in range(3000):
        terms = {}
        for _ in range(rng.randint(0, 4)):
            mono = tuple(rng.choice(syms) for _ in range(rng.randint(0, 3)))
            terms[mono] = mpq(rng.randint(-3, 3), rng.randint(1, 3))
        poly = Poly(terms)
        assert seen.setdefault(render(poly), poly) == poly

"""Polynomial arithmetic, monomial orders and leading data."""

import itertools

import pytest

from conftest import DEGLEX_X_ABOVE_Y, LEX_X_BELOW_Y, p, polys
from torsion_border import MonomialOrder, Polynomial, leading_data, monomial_compare
from torsion_border.errors import ArityMismatch, ZeroPolynomialError
from torsion_border.order_ideal import monomials_up_to_degree


def test_compare_lex_priority():
    # with y most significant, x is below y
    assert monomial_compare(LEX_X_BELOW_Y, (1, 0), (0, 1)) == -1
    assert monomial_compare(LEX_X_BELOW_Y, (1, 1), (1, 1)) == 0


def test_compare_deglex_degree_two():
    # x above y: x^2 > xy > y^2
    x2, xy, y2 = (2, 0), (1, 1), (0, 2)
    assert monomial_compare(DEGLEX_X_ABOVE_Y, x2, xy) == 1
    assert monomial_compare(DEGLEX_X_ABOVE_Y, xy, y2) == 1
    assert monomial_compare(DEGLEX_X_ABOVE_Y, x2, y2) == 1


def test_compare_degree_dominates_deglex():
    assert monomial_compare(DEGLEX_X_ABOVE_Y, (0, 3), (2, 0)) == 1


def test_degrevlex_tie_breaking():
    # classic: with x > y > z, degrevlex puts y^2 above xz
    order = MonomialOrder("degrevlex", (0, 1, 2))
    assert monomial_compare(order, (0, 2, 0), (1, 0, 1)) == 1
    assert monomial_compare(order, (2, 0, 0), (1, 1, 0)) == 1


def test_compare_arity_mismatch():
    with pytest.raises(ArityMismatch):
        monomial_compare(LEX_X_BELOW_Y, (1, 0, 0), (0, 1))


def test_add_inverse():
    f = p("x^3 - x")
    g = p("x - x^3")
    assert (f + g).is_zero


def test_term_multiplication():
    f = p("x^3 - x")
    assert f.mul_term(1, (1, 0)) == p("x^4 - x^2")


def test_mixed_arith():
    f, g = polys("4y + 2x", "y^2")
    assert f * p("y") - 4 * g == p("2xy")


def test_leading_data_examples():
    lt, lm, lc = leading_data(LEX_X_BELOW_Y, p("4y + 2x"))
    assert (lc, lm) == (4, (0, 1))
    lt, lm, lc = leading_data(LEX_X_BELOW_Y, p("7"))
    assert (lc, lm) == (7, (0, 0))
    lt, lm, lc = leading_data(DEGLEX_X_ABOVE_Y, p("xy^2 + 2x^2y^2"))
    assert (lc, lm) == (2, (2, 2))


def test_leading_data_zero_rejected():
    with pytest.raises(ZeroPolynomialError):
        leading_data(LEX_X_BELOW_Y, Polynomial.zero(2))


def test_arith_arity_mismatch():
    with pytest.raises(ArityMismatch):
        p("x") + Polynomial.zero(3)


@pytest.mark.parametrize("kind", ["lex", "deglex", "degrevlex"])
def test_multiplicativity(kind, rng):
    order = MonomialOrder(kind, (1, 0, 2))
    for _ in range(300):
        a, b, c = (tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(3))
        cmp_ab = order.compare(a, b)
        from torsion_border.poly import mon_mul

        assert order.compare(mon_mul(c, a), mon_mul(c, b)) == cmp_ab


@pytest.mark.parametrize("kind", ["lex", "deglex", "degrevlex"])
def test_one_is_minimal(kind):
    order = MonomialOrder(kind, (0, 1))
    for m in monomials_up_to_degree(2, 5):
        assert order.compare((0, 0), m) <= 0


def test_leading_term_multiplicative(rng):
    order = MonomialOrder("deglex", (0, 1))
    for _ in range(200):
        f = _random_poly(rng)
        g = _random_poly(rng)
        if f.is_zero or g.is_zero:
            continue
        cf, mf = f.leading_term(order)
        cg, mg = g.leading_term(order)
        ch, mh = (f * g).leading_term(order)
        assert ch == cf * cg
        assert mh == tuple(a + b for a, b in zip(mf, mg))


def _random_poly(rng, max_terms=4, max_exp=3, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mon = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[mon] = rng.randint(-max_coeff, max_coeff)
    return Polynomial(2, terms)


def test_ring_axioms_exhaustive_small():
    # complete check over all polynomials supported on {1, x, y} with
    # coefficients in {-1, 0, 1}
    mons = [(0, 0), (1, 0), (0, 1)]
    pool = []
    for coeffs in itertools.product((-1, 0, 1), repeat=3):
        pool.append(Polynomial(2, dict(zip(mons, coeffs))))
    for f, g in itertools.product(pool, repeat=2):
        assert f + g == g + f
        assert f * g == g * f
    for f, g, h in itertools.product(pool[:9], pool[:9], pool[:9]):
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)


def test_ring_axioms_random(rng):
    for _ in range(150):
        f, g, h = (_random_poly(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f + g == g + f
        assert f * g == g * f

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasidedekind.exact import (
    Polynomial,
    binomial,
    floor_frac,
    format_rational,
    poly_affine_compose,
    poly_antiderivative,
    poly_derivative,
    poly_eval,
)

F = Fraction
rationals = st.fractions(min_value=-10**4, max_value=10**4, max_denominator=50)
polys = st.lists(st.fractions(min_value=-100, max_value=100, max_denominator=12), max_size=8).map(Polynomial)

E1 = Polynomial((F(-1, 2), 1))
E2 = Polynomial((0, -1, 1))


@pytest.mark.parametrize("x, whole, frac", [(F(10, 3), 3, F(1, 3)), (F(-1, 2), -1, F(1, 2)), (F(5), 5, F(0))])
def test_floor_frac_examples(x, whole, frac):
    assert floor_frac(x) == (whole, frac)


def test_binomial():
    assert binomial(4, 1) == 4
    assert binomial(1, 1) == 1
    assert binomial(2, 1) == 2
    assert binomial(2, 5) == 0


def test_polynomial_normalizes():
    assert Polynomial((1, 0, 0)).coeffs == (1,)
    assert Polynomial((0, 0)).is_zero()
    assert Polynomial().degree == -1
    assert E2.degree == 2


def test_poly_eval_examples():
    assert poly_eval(E1, F(2, 3)) == F(1, 6)
    assert poly_eval(Polynomial(), F(3, 7)) == 0
    assert poly_eval(Polynomial.constant(1), F(7, 11)) == 1


def test_poly_derivative_examples():
    assert poly_derivative(E2, 1) == E1 * 2
    assert poly_derivative(E2, 0) == E2
    assert poly_derivative(E1, 2).is_zero()


def test_poly_antiderivative_examples():
    assert poly_antiderivative(Polynomial.constant(1)) == Polynomial.monomial(1)
    assert poly_antiderivative(Polynomial((-1, 2))) == Polynomial((0, -1, 1))
    assert poly_antiderivative(Polynomial.monomial(2)) == Polynomial.monomial(3, F(1, 3))


def test_poly_affine_compose_examples():
    assert poly_affine_compose(Polynomial.monomial(1), 3, 0) == Polynomial.monomial(1, 3)
    assert poly_affine_compose(E1, 1, 1) == Polynomial((F(1, 2), 1))
    assert poly_affine_compose(E2, 1, 0) == E2


def test_format_rational():
    assert format_rational(F(-4160, 16807)) == "-4160/16807"
    assert format_rational(F(6, 3)) == "2"


@given(rationals, st.integers(-1000, 1000))
def test_floor_frac_shift(x, r):
    w, f = floor_frac(x)
    assert 0 <= f < 1 and w + f == x
    assert floor_frac(x + r) == (w + r, f)


@given(polys)
def test_derivative_undoes_antiderivative(P):
    assert poly_derivative(poly_antiderivative(P), 1) == P


@given(polys, rationals, rationals, rationals)
@settings(max_examples=200)
def test_affine_compose_matches_substitution(P, c, d, x):
    assert poly_eval(poly_affine_compose(P, c, d), x) == poly_eval(P, c * x + d)


@given(polys, polys, rationals)
def test_ring_operations_evaluate_pointwise(P, Q, x):
    assert poly_eval(P * Q, x) == poly_eval(P, x) * poly_eval(Q, x)
    assert poly_eval(P + Q, x) == poly_eval(P, x) + poly_eval(Q, x)
    assert poly_eval(P - Q, x) == poly_eval(P, x) - poly_eval(Q, x)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    for v in (x + y, x * y, x - z):
        assert v.denominator > 0
        assert F(v.numerator, v.denominator) == v

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, Symbol, resultant as sympy_resultant

from core.exceptions import DivisionByZeroError, PolynomialError
from core.fields.prime import PrimeField
from core.poly.polynomial import Polynomial, lagrange_interpolate, poly_gcd, resultant
from core.poly.sqfree import squarefree_decomposition, squarefree_part
from tests.conftest import poly

z = Symbol("z")


def test_degree_and_zero(Q):
    assert Polynomial.zero(Q).degree == float("-inf")
    assert Polynomial.zero(Q).is_zero
    assert poly(Q, 0, 0, 0).is_zero
    assert poly(Q, 1, 2, 0).degree == 1


def test_divmod(Q):
    q, r = divmod(poly(Q, 1, 0, 1), poly(Q, -1, 1))
    assert q == poly(Q, 1, 1)
    assert r == poly(Q, 2)


def test_division_by_zero_polynomial(Q):
    with pytest.raises(DivisionByZeroError):
        divmod(poly(Q, 1, 1), Polynomial.zero(Q))


def test_gcd_examples(Q, F2):
    assert poly_gcd(poly(Q, -1, 0, 1), poly(Q, -1, 1)) == poly(Q, -1, 1)
    assert poly_gcd(poly(Q, 2, 4), Polynomial.zero(Q)) == poly(Q, Fraction(1, 2), 1)
    assert poly_gcd(poly(F2, 1, 0, 1), poly(F2, 1, 1)) == poly(F2, 1, 1)


def test_resultant_examples(Q):
    a, b = Fraction(3), Fraction(-5)
    assert resultant(Polynomial.linear(Q, a), Polynomial.linear(Q, b)).payload == a - b
    assert resultant(poly(Q, -1, 0, 1), poly(Q, -1, 1)).is_zero()
    assert resultant(poly(Q, -2, 0, 0, 1), poly(Q, 0, 0, 3)).payload == 108


def test_resultant_of_zero(Q):
    with pytest.raises(PolynomialError):
        resultant(Polynomial.zero(Q), poly(Q, 1, 1))


def test_reverse_and_root_multiplicity(Q):
    f = poly(Q, 0, 0, 1, 1)
    assert f.reverse(3) == poly(Q, 1, 1)
    assert f.root_multiplicity(Fraction(0)) == 2
    assert f.root_multiplicity(Fraction(-1)) == 1
    assert f.root_multiplicity(Fraction(5)) == 0


def test_compose_and_derivative(F7):
    f = poly(F7, 1, 0, 1)
    g = poly(F7, 1, 1)
    assert f.compose(g) == poly(F7, 2, 2, 1)
    assert poly(F7, 0, 0, 0, 0, 0, 0, 0, 1).derivative().is_zero


def test_lagrange_interpolation(Q):
    xs = [Fraction(i) for i in range(4)]
    ys = [x ** 3 - 2 * x for x in xs]
    assert lagrange_interpolate(Q, xs, ys) == poly(Q, 0, -2, 0, 1)
    with pytest.raises(PolynomialError):
        lagrange_interpolate(Q, [Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)])


def test_render(F7):
    assert poly(F7, 1, 2, 0, 1).render() == "z^3+2*z+1"
    assert Polynomial.zero(F7).render() == "0"


def test_squarefree_examples(Q, F2):
    decomposition = squarefree_decomposition(poly(Q, 0, 0, 3))
    assert decomposition.factors == ((poly(Q, 0, 1), 2),)
    assert decomposition.leading.payload == 3

    decomposition = squarefree_decomposition(poly(Q, 1, 0, -2, 0, 1))
    assert decomposition.factors == ((poly(Q, -1, 0, 1), 2),)

    decomposition = squarefree_decomposition(poly(F2, 0, 0, 1))
    assert decomposition.perfect_power
    assert decomposition.factors == ((poly(F2, 0, 1), 2),)


def test_squarefree_decomposition_of_zero(Q):
    with pytest.raises(PolynomialError):
        squarefree_decomposition(Polynomial.zero(Q))


coefficient_lists = st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=7)


@settings(max_examples=60, deadline=None)
@given(coefficient_lists, coefficient_lists)
def test_gcd_matches_sympy(a, b):
    K = PrimeField(11)
    f, g = Polynomial.from_ints(K, a), Polynomial.from_ints(K, b)
    if f.is_zero and g.is_zero:
        return
    expected = Poly(list(reversed(a)), z, modulus=11).gcd(Poly(list(reversed(b)), z, modulus=11)).monic()
    assert poly_gcd(f, g) == Polynomial.from_ints(K, list(reversed(expected.all_coeffs())))


@settings(max_examples=60, deadline=None)
@given(coefficient_lists, coefficient_lists)
def test_resultant_matches_sympy(a, b):
    K = PrimeField(11)
    f, g = Polynomial.from_ints(K, a), Polynomial.from_ints(K, b)
    if f.is_zero or g.is_zero or f.degree < 1 or g.degree < 1:
        return
    expected = sympy_resultant(
        Poly(list(reversed(f.coeffs)), z, domain="ZZ"), Poly(list(reversed(g.coeffs)), z, domain="ZZ")
    )
    assert resultant(f, g).payload == int(expected) % 11


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=9))
def test_squarefree_expands_back(a):
    K = PrimeField(7)
    f = Polynomial.from_ints(K, a)
    if f.is_zero:
        return
    decomposition = squarefree_decomposition(f)
    assert decomposition.expand() == f
    part = squarefree_part(f)
    assert poly_gcd(part, part.derivative()).degree <= 0

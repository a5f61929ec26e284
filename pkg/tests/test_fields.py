from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from core.exceptions import DivisionByZeroError, FieldError, FieldMismatchError, ReducibleModulusError
from core.fields.element import FieldElement, arith, invert
from core.fields.extension import ExtensionField
from core.fields.factory import adjoin_root, field_make, fresh_variable, parse_element, parse_polynomial
from core.fields.function import FunctionField
from core.fields.prime import PrimeField
from core.fields.rational import RationalField
from tests.conftest import poly


def test_field_make_basic_fields():
    Q = field_make("Q")
    assert Q == RationalField()
    assert Q.characteristic == 0
    assert Q.order is None

    F7 = field_make("F7")
    assert F7 == PrimeField(7)
    assert F7.characteristic == 7
    assert F7.order == 7


def test_field_make_extension_of_f2():
    F4 = field_make("F2[w]/(w^2+w+1)")
    assert isinstance(F4, ExtensionField)
    assert F4.order == 4
    assert F4.characteristic == 2
    assert F4.variables == ("w",)
    assert field_make(F4.text) == F4


def test_field_make_ignores_whitespace():
    assert field_make(" F2 [w] / (w^2 + w + 1) ") == field_make("F2[w]/(w^2+w+1)")


def test_field_make_function_field():
    K = field_make("F5(u)")
    assert isinstance(K, FunctionField)
    assert K.text == "F5(u)"
    assert K.characteristic == 5
    assert not K.is_finite


@pytest.mark.parametrize("text", ["F6", "F1", "R", "Q[", "F2[w]/(w^2+w+1"])
def test_field_make_rejects_malformed(text):
    with pytest.raises(FieldError):
        field_make(text)


def test_field_make_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulusError):
        field_make("F2[w]/(w^2+1)")


def test_field_make_rejects_reused_variable():
    with pytest.raises(FieldError):
        field_make("F2[w]/(w^2+w+1)[w]/(w^2+w+1)")


def test_rational_arithmetic(Q):
    a = FieldElement.of(Q, Fraction(2, 3))
    b = FieldElement.of(Q, Fraction(1, 6))
    assert arith(a, b, "add").payload == Fraction(5, 6)
    assert invert(a).payload == Fraction(3, 2)


def test_prime_arithmetic(F7):
    three, five = FieldElement.of(F7, 3), FieldElement.of(F7, 5)
    assert arith(three, five, "mul").payload == 1
    assert invert(three).payload == 5


def test_extension_arithmetic(F4, omega):
    assert (omega * omega).payload == (1, 1)
    assert invert(omega) == omega + 1
    assert omega * omega * omega == FieldElement.of(F4, 1)


def test_division_by_zero(F7):
    with pytest.raises(DivisionByZeroError):
        arith(FieldElement.of(F7, 1), FieldElement.of(F7, 0), "div")


def test_mixed_fields_rejected(F5, F7):
    with pytest.raises(FieldMismatchError):
        arith(FieldElement.of(F5, 1), FieldElement.of(F7, 1), "add")


def test_unknown_operation(F7):
    with pytest.raises(FieldError):
        arith(FieldElement.of(F7, 1), FieldElement.of(F7, 1), "pow")


def test_json_formats(Q, F7, F4, omega):
    assert Q.to_json(Fraction(-3, 4)) == "-3/4"
    assert Q.from_json("5") == Fraction(5)
    assert F7.to_json(3) == "3"
    assert F7.from_json("10") == 3
    assert omega.to_json() == ["0", "1"]
    assert F4.from_json(["1"]) == (1, 0)


def test_function_field_json_and_arithmetic():
    K = field_make("F5(u)")
    u = parse_element(K, "u")
    x = (u + 1) / (u - 1)
    assert K.from_json(x.to_json()) == x.payload
    assert x.to_json() == '["1","1"]|["4","1"]'
    assert (x * (u - 1) / (u + 1)) == FieldElement.of(K, 1)


@pytest.mark.parametrize("value", ["1/0", "x", "1.5"])
def test_rational_from_json_rejects(Q, value):
    with pytest.raises(FieldError):
        Q.from_json(value)


def test_extension_from_json_rejects_long_list(F4):
    with pytest.raises(FieldError):
        F4.from_json(["1", "0", "1"])


def test_rational_enumeration(Q):
    assert [Q.element_from_index(i) for i in range(7)] == [
        Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(2), Fraction(-2),
    ]


def test_finite_enumeration_covers_field(F4):
    assert len(set(F4.elements())) == 4


def test_adjoin_root_over_f7(F7):
    L, r = adjoin_root(F7, poly(F7, -2, 0, 0, 1))
    assert L.order == 343
    assert r ** 3 == FieldElement.of(L, 2)
    assert L.var == fresh_variable(F7) == "a1"


def test_adjoin_root_builds_f4(F2):
    L, w = adjoin_root(F2, parse_polynomial(F2, "z^2+z+1", "z"), var="w")
    assert L == field_make("F2[w]/(w^2+w+1)")
    assert w * w + w + 1 == FieldElement.of(L, 0)


def test_adjoin_root_rejects_linear(F7):
    with pytest.raises(FieldError):
        adjoin_root(F7, poly(F7, -3, 1))


def test_rational_adjunction_up_to_degree_three(Q):
    L, r = adjoin_root(Q, poly(Q, -2, 0, 0, 1))
    assert r ** 3 == FieldElement.of(L, 2)
    with pytest.raises(FieldError):
        adjoin_root(Q, poly(Q, -2, 0, 0, 0, 1))


def test_parse_element_expressions(F4, Q):
    assert parse_element(F4, "w^2") == parse_element(F4, "w+1")
    assert parse_element(Q, "2/3").payload == Fraction(2, 3)
    assert parse_element(F4, '["1","1"]') == parse_element(F4, "w+1")


@given(st.integers(min_value=1, max_value=96), st.integers(min_value=1, max_value=96))
def test_prime_field_inverse_roundtrip(a, b):
    K = PrimeField(97)
    x, y = FieldElement.of(K, a), FieldElement.of(K, b)
    assert (x / y) * y == x
    assert invert(invert(x)) == x


@given(st.fractions(), st.fractions())
def test_rational_field_axioms(a, b):
    K = RationalField()
    x, y = FieldElement.of(K, a), FieldElement.of(K, b)
    assert x + y == y + x
    assert (x - y) + y == x
    assert x * (y + 1) == x * y + x

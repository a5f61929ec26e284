import pytest

from core.exceptions import BoundaryPointError, ConstantMapError, FieldMismatchError, MapError
from core.fields.factory import parse_element
from core.poly.polynomial import Polynomial
from core.projline.mobius import Mobius
from core.projline.points import ProjPoint, parse_point
from core.ramification.maps import RationalMap, map_compose, map_compose_all, map_eval, map_make, push_forward
from tests.conftest import poly, rational_map


def z3_plus_omega(F4, omega):
    return map_make(Polynomial(F4, (omega.payload, F4.zero, F4.zero, F4.one)), Polynomial.one(F4))


def test_map_make_cube(Q, cube_Q):
    f = rational_map(Q, (0, 0, 0, 1))
    assert f == cube_Q
    assert f.degree == 3


def test_map_make_cancels_common_factor(Q):
    f = rational_map(Q, (-1, 0, 1), (-1, 1))
    assert f.numerator == poly(Q, 1, 1)
    assert f.denominator == poly(Q, 1)
    assert f.degree == 1


def test_map_make_normalizes_denominator(Q):
    f = rational_map(Q, (1, 0, 2), (4, 2))
    assert f.denominator.is_monic
    assert f.numerator == poly(Q, "1/2", 0, 1)


@pytest.mark.parametrize(
    "numerator, denominator, error",
    [((5,), (0,), ConstantMapError), ((0,), (0,), MapError), ((2,), (3,), ConstantMapError), ((2, 2), (1, 1), ConstantMapError)],
)
def test_map_make_rejects_constants(Q, numerator, denominator, error):
    with pytest.raises(error):
        rational_map(Q, numerator, denominator)


def test_map_eval(Q, cube_Q, F4, omega):
    assert map_eval(cube_Q, parse_point(Q, "2")) == parse_point(Q, "8")
    assert cube_Q(ProjPoint.infinity(Q)).is_infinity
    assert z3_plus_omega(F4, omega)(parse_point(F4, "0")) == parse_point(F4, "w")


def test_map_eval_at_pole_and_infinity(Q):
    f = rational_map(Q, (1, 0, 2), (-1, 0, 1))
    assert f(parse_point(Q, "1")).is_infinity
    assert f(ProjPoint.infinity(Q)) == parse_point(Q, "2")


def test_compose_degrees(Q, cube_Q, F4, omega):
    assert map_compose(cube_Q, cube_Q) == RationalMap.power_map(Q, 9)
    shift = RationalMap.from_mobius(Mobius.from_ints(Q, 1, 1, 0, 1))
    assert map_compose(shift, cube_Q) == rational_map(Q, (1, 0, 0, 1))
    g = z3_plus_omega(F4, omega)
    h = map_compose(RationalMap.power_map(F4, 3), g)
    w = omega.payload
    w2 = F4.mul(w, w)
    assert h.degree == 9
    assert h.numerator == Polynomial(
        F4, (F4.one, F4.zero, F4.zero, w2, F4.zero, F4.zero, w, F4.zero, F4.zero, F4.one)
    )


def test_compose_rational_maps_multiplies_degrees(Q):
    f = rational_map(Q, (1, 0, 1), (0, 1))
    g = rational_map(Q, (2, 0, 0, 1), (1, 1))
    assert map_compose(f, g).degree == 6
    assert map_compose_all([f, g, f]).degree == 12


def test_compose_over_different_fields(Q, F7):
    with pytest.raises(FieldMismatchError):
        map_compose(RationalMap.power_map(Q, 3), RationalMap.power_map(F7, 3))


def test_reversed_moves_infinity_to_zero(Q):
    f = rational_map(Q, (0, -3, 0, 1))
    r = f.reversed()
    assert r.numerator == poly(Q, 1, 0, -3)
    assert r.denominator == poly(Q, 0, 0, 0, 1)


def test_fiber_polynomial(Q):
    f = rational_map(Q, (0, 0, 1), (1, 1))
    assert f.fiber_polynomial(parse_point(Q, "2")) == poly(Q, -2, -2, 1)
    assert f.fiber_polynomial(ProjPoint.infinity(Q)) == poly(Q, 1, 1)


def test_power_map_needs_positive_exponent(Q):
    with pytest.raises(MapError):
        RationalMap.power_map(Q, 0)


def test_push_forward(Q, cube_Q):
    image = push_forward(cube_Q, [parse_point(Q, t) for t in ("0", "1", "inf", "2")])
    assert image.to_json() == ["0", "1", "inf", "8"]
    with pytest.raises(BoundaryPointError):
        push_forward(RationalMap.power_map(Q, 2), [parse_point(Q, t) for t in ("0", "1", "-1")])


def test_embed_into_extension(F2, F4):
    f = RationalMap.power_map(F2, 3).embed(F4)
    assert f.field == F4
    assert f(parse_point(F4, "w")) == parse_point(F4, "1")
    assert parse_element(F4, "w") ** 3 == parse_element(F4, "1")

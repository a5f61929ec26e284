import pytest
from hypothesis import given, settings, strategies as st

from core.exceptions import CharacteristicError, CurveError, SingularFiberError
from core.fields.element import FieldElement
from core.fields.prime import PrimeField
from core.projline.points import ProjPoint, parse_point
from core.weierstrass.family import (
    WeierstrassCurve,
    branch_divisor,
    cusp_parametrization,
    fiber_analysis,
    j_invariant,
    rh_genus,
    singular_locus,
    tangent_cone_kind,
)


def divisor_json(t):
    return [(p.to_json(), m) for p, m in branch_divisor(t)]


def test_branch_divisor(Q, F5):
    assert divisor_json(FieldElement.of(Q, 1)) == [("0", 1), ("1", 1), ("inf", 1)]
    assert divisor_json(FieldElement.of(Q, 0)) == [("0", 2), ("inf", 1)]
    assert divisor_json(FieldElement.of(F5, 2)) == [("0", 1), ("2", 1), ("inf", 1)]


def test_fiber_analysis(Q):
    t = FieldElement.of(Q, 1)
    (point,) = fiber_analysis(t, parse_point(Q, "3"))
    assert (point.residue_degree, point.e) == (3, 1)
    assert point.label() == "roots of z^3+(-6)"

    (point,) = fiber_analysis(t, parse_point(Q, "1"))
    assert (point.label(), point.e) == ("0", 3)

    (point,) = fiber_analysis(t, ProjPoint.infinity(Q))
    assert (point.label(), point.e) == ("[0,1,0]", 3)


def test_fiber_splits_over_f7(F7):
    fiber = fiber_analysis(FieldElement.of(F7, 1), parse_point(F7, "3"))
    assert sorted(point.label() for point in fiber) == ["3", "5", "6"]
    assert all(point.e == 1 for point in fiber)


def test_singular_locus(Q, F2):
    assert singular_locus(FieldElement.of(Q, 1)).smooth
    locus = singular_locus(FieldElement.of(Q, 0))
    assert not locus.smooth
    assert locus.point_label() == "[0,0,1]"
    assert locus.kind == "cusp"
    assert singular_locus(FieldElement.of(F2, 1)).smooth


def test_cusp_in_characteristic_two(F2, F5):
    for K in (F2, F5):
        locus = singular_locus(FieldElement.of(K, 0))
        assert (locus.point_label(), locus.kind) == ("[0,0,1]", "cusp")


@pytest.mark.parametrize(
    "field_name, form, kind",
    [
        ("Q", (1, 0, -1), "node"),
        ("Q", (1, 2, 1), "cusp"),
        ("Q", (1, 0, 1), "node"),
        ("Q", (0, 1, 0), "node"),
        ("Q", (0, 0, 1), "cusp"),
        ("F2", (1, 1, 1), "node"),
        ("F2", (1, 0, 1), "cusp"),
        ("F2", (0, 1, 1), "node"),
        ("F5", (1, 2, 1), "cusp"),
    ],
)
def test_tangent_cone_kind(request, field_name, form, kind):
    K = request.getfixturevalue(field_name)
    assert tangent_cone_kind(*(FieldElement.of(K, c) for c in form)) == kind


def test_tangent_cone_of_a_triple_point(Q):
    zero = FieldElement.of(Q, 0)
    with pytest.raises(CurveError):
        tangent_cone_kind(zero, zero, zero)


def test_discriminant_in_characteristic_two(F2):
    curve = WeierstrassCurve.family_member(FieldElement.of(F2, 1))
    assert curve.discriminant == FieldElement.of(F2, 1)
    assert curve.is_smooth


def test_discriminant_formula(Q):
    t = FieldElement.of(Q, 2)
    curve = WeierstrassCurve.family_member(t)
    assert curve.c4.is_zero()
    assert curve.discriminant == -27 * t ** 4


def test_general_curve_invariants(Q):
    # y^2 + y = x^3 - x^2 has conductor 11 and discriminant -11.
    curve = WeierstrassCurve.from_coefficients(Q, 0, -1, 1, 0, 0)
    assert curve.discriminant == FieldElement.of(Q, -11)
    assert curve.j_invariant == FieldElement.of(Q, 16) ** 3 / -11


def test_j_invariant(Q, F7):
    assert j_invariant(FieldElement.of(Q, 1)).is_zero()
    assert j_invariant(FieldElement.of(F7, 5)).is_zero()
    with pytest.raises(SingularFiberError):
        j_invariant(FieldElement.of(Q, 0))


def test_rh_genus(Q, F5):
    report = rh_genus(FieldElement.of(Q, 1))
    assert (report.geometric, report.arithmetic, report.delta) == (1, 1, 0)
    assert report.smooth
    assert rh_genus(FieldElement.of(F5, 2)).geometric == 1
    report = rh_genus(FieldElement.of(Q, 0))
    assert (report.geometric, report.arithmetic, report.delta) == (0, 1, 1)


def test_cusp_parametrization(Q):
    check = cusp_parametrization(Q)
    assert check.satisfies_equation
    assert check.index_at_origin == 3


def test_characteristic_three_is_rejected():
    t = FieldElement.of(PrimeField(3), 1)
    for operation in (branch_divisor, j_invariant, rh_genus, singular_locus):
        with pytest.raises(CharacteristicError):
            operation(t)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([5, 7, 13]), st.integers(min_value=1), st.integers())
def test_family_invariants_over_prime_fields(p, t_value, c_value):
    K = PrimeField(p)
    t = FieldElement.of(K, t_value)
    if t.is_zero():
        return
    divisor = branch_divisor(t)
    assert len({point for point, _ in divisor}) == 3
    assert sum(m for point, m in divisor if not point.is_infinity) == 2
    for point, _ in divisor:
        assert [q.e for q in fiber_analysis(t, point)] == [3]
    assert rh_genus(t).geometric == 1
    assert j_invariant(t).is_zero()
    assert singular_locus(t).smooth

    fiber = fiber_analysis(t, ProjPoint(K, K.from_int(c_value)))
    assert sum(q.e * q.residue_degree for q in fiber) == 3

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from core.exceptions import CharacteristicError, InseparableMapError, NotFiniteFieldError
from core.fields.factory import field_make
from core.poly.polynomial import Polynomial
from core.projline.mobius import Mobius
from core.projline.points import ProjPoint, parse_point
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap, map_compose, map_make
from core.ramification.profile import (
    branch_points,
    branch_value_polynomial,
    critical_form,
    is_triple_only,
    ramification_marking,
    ramification_profile,
)
from tests.conftest import draw_mobius_steps, poly, rational_map, step_composition


def by_point(profile):
    return {entry.point.render(): entry for entry in profile.entries}


def omega_cubed_map(F4, omega):
    inner = map_make(Polynomial(F4, (omega.payload, F4.zero, F4.zero, F4.one)), Polynomial.one(F4))
    return map_compose(RationalMap.power_map(F4, 3), inner)


def test_critical_form_of_cube(Q, cube_Q):
    form = critical_form(cube_Q)
    assert form.wronskian == poly(Q, 0, 0, 3)
    assert form.infinity_order == 2
    assert form.vanishes_at(ProjPoint.infinity(Q))
    assert not form.vanishes_at(parse_point(Q, "1"))


def test_frobenius_is_inseparable(F2):
    with pytest.raises(InseparableMapError):
        critical_form(RationalMap.power_map(F2, 2))
    with pytest.raises(InseparableMapError):
        ramification_profile(RationalMap.power_map(F2, 2))


def test_artin_schreier_is_wild_at_infinity(F2):
    f = rational_map(F2, (0, 1, 1))
    form = critical_form(f)
    assert form.wronskian == poly(F2, 1)
    assert form.infinity_order == 2
    profile = ramification_profile(f)
    (entry,) = profile.entries
    assert entry.point.is_infinity
    assert entry.e == 2
    assert entry.different_exponent == 2
    assert not entry.tame
    assert not profile.all_tame
    assert profile.rh_consistent


def test_cube_profile(Q, cube_Q):
    verdict, profile = is_triple_only(cube_Q)
    assert verdict
    entries = by_point(profile)
    assert set(entries) == {"0", "inf"}
    assert entries["0"].e == entries["inf"].e == 3
    assert entries["0"].branch_value == ClosedPoint.rational(Q, Q.zero)
    assert entries["inf"].branch_value.is_infinity
    assert profile.geometric_count == 2
    assert profile.rh_consistent
    assert profile.entries[-1].point.is_infinity


def test_cube_over_f2_is_tame(F2):
    verdict, profile = is_triple_only(RationalMap.power_map(F2, 3))
    assert verdict
    assert profile.all_tame


def test_cubic_with_simple_ramification(Q):
    f = rational_map(Q, (0, -3, 0, 1))
    verdict, profile = is_triple_only(f)
    assert not verdict
    entries = by_point(profile)
    assert set(entries) == {"1", "-1", "inf"}
    assert entries["1"].e == entries["-1"].e == 2
    assert entries["inf"].e == 3
    assert entries["1"].branch_value == ClosedPoint.rational(Q, Q.from_int(-2))
    assert entries["-1"].branch_value == ClosedPoint.rational(Q, Q.from_int(2))
    assert profile.rh_consistent


def test_omega_profile_over_f4(F4, omega):
    profile = ramification_profile(omega_cubed_map(F4, omega))
    entries = by_point(profile)
    zero = entries["0"]
    assert (zero.e, zero.residue_degree, zero.different_exponent) == (3, 1, 2)
    assert zero.branch_value == ClosedPoint.rational(F4, F4.one)
    cubic = next(entry for entry in profile.entries if entry.residue_degree == 3)
    assert cubic.point.polynomial == Polynomial(F4, (omega.payload, F4.zero, F4.zero, F4.one))
    assert cubic.e == 3
    assert cubic.branch_value == ClosedPoint.rational(F4, F4.zero)
    assert entries["inf"].e == 9
    assert entries["inf"].different_exponent == 8
    assert profile.all_tame
    assert not profile.triple_only
    assert profile.tame_sum == profile.different_degree == 16
    assert profile.rh_consistent


def test_branch_points(Q, cube_Q, F4, omega):
    assert [p.render() for p in branch_points(cube_Q)] == ["0", "inf"]
    shifted = map_compose(RationalMap.from_mobius(Mobius.from_ints(Q, 1, 1, 0, 1)), cube_Q)
    assert [p.render() for p in branch_points(shifted)] == ["1", "inf"]
    assert {p.render() for p in branch_points(omega_cubed_map(F4, omega))} == {"0", "1", "inf"}


def test_identity_is_vacuously_triple_only(Q):
    verdict, profile = is_triple_only(RationalMap.identity(Q))
    assert verdict
    assert profile.entries == ()


def test_irrational_ramification_over_q(Q):
    f = rational_map(Q, (0, -6, 0, 1))
    profile = ramification_profile(f)
    entries = [entry for entry in profile.entries if not entry.point.is_infinity]
    (entry,) = entries
    assert entry.point.polynomial == poly(Q, -2, 0, 1)
    assert entry.residue_degree == 2
    assert entry.e == 2
    assert entry.branch_value.polynomial == poly(Q, -32, 0, 1)
    assert branch_value_polynomial(f, poly(Q, -2, 0, 1)) == poly(Q, -32, 0, 1)


def test_conjugate_points_with_rational_branch_value(Q):
    f = rational_map(Q, (4, 0, -4, 0, 1))
    entries = by_point(ramification_profile(f))
    assert entries["0"].e == 2
    assert entries["0"].branch_value == ClosedPoint.rational(Q, Q.from_int(4))
    conjugate = next(entry for entry in entries.values() if entry.residue_degree == 2)
    assert conjugate.point.polynomial == poly(Q, -2, 0, 1)
    assert conjugate.e == 2
    assert conjugate.branch_value == ClosedPoint.rational(Q, Q.zero)
    assert entries["inf"].e == 4


def test_profile_of_map_with_poles(Q):
    f = rational_map(Q, (0, 0, 0, 1), (1, 0, 0, 1))
    verdict, profile = is_triple_only(f)
    assert verdict
    assert {p.render() for p in profile.branch_values} == {"0", "1"}


def test_characteristic_three_is_rejected():
    F3 = field_make("F3")
    with pytest.raises(CharacteristicError):
        is_triple_only(rational_map(F3, (0, 1, 0, 0, 1)))


def test_function_field_profiles_are_refused():
    K = field_make("F5(u)")
    f = map_make(Polynomial(K, (K.zero, K.zero, K.zero, K.one)), Polynomial.one(K))
    with pytest.raises(NotFiniteFieldError):
        ramification_profile(f)


def test_profile_over_f7_needs_extension(F7):
    # Critical points of z^3 + 3z over F7 are the roots of z^2 + 1.
    f = rational_map(F7, (0, 3, 0, 1))
    profile = ramification_profile(f)
    finite = [entry for entry in profile.entries if not entry.point.is_infinity]
    (entry,) = finite
    assert entry.point.polynomial == poly(F7, 1, 0, 1)
    assert entry.residue_degree == 2
    assert entry.e == 2
    assert profile.tame_sum == 4


def test_ramification_marking(F7):
    f = RationalMap.power_map(F7, 3)
    marking = ramification_marking(f, (parse_point(F7, "0"), parse_point(F7, "inf"), parse_point(F7, "1")))
    assert marking.points[0] == parse_point(F7, "0")
    assert marking.points[1].is_infinity
    assert marking.points[2] is None
    assert marking.coordinates is None


@pytest.mark.parametrize("field_text", ["Q", "F2", "F2[w]/(w^2+w+1)", "F5", "F7", "F11", "F13"])
@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(data=st.data())
def test_riemann_hurwitz_for_step_compositions(field_text, data):
    K = field_make(field_text)
    f = step_composition(draw_mobius_steps(K, data))
    d = f.degree
    profile = ramification_profile(f)
    assert profile.all_tame
    # Genus 0 on both sides: 2*0 - 2 = d*(2*0 - 2) + sum of (e - 1).
    assert -2 == -2 * d + profile.tame_sum
    assert profile.different_degree == 2 * d - 2
    assert profile.rh_consistent

    verdict, _ = is_triple_only(f)
    assert verdict == profile.triple_only
    if verdict:
        assert profile.geometric_count == d - 1

"""Shared fixtures: fields, elements and small maps."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, strategies as st

from config.manager import ConfigManager
from core.fields.factory import field_make, parse_element
from core.fields.prime import PrimeField
from core.fields.rational import RationalField
from core.poly.polynomial import Polynomial
from core.projline.mobius import Mobius
from core.ramification.maps import RationalMap, map_compose, map_make


@pytest.fixture
def Q():
    return RationalField()


@pytest.fixture
def F2():
    return PrimeField(2)


@pytest.fixture
def F5():
    return PrimeField(5)


@pytest.fixture
def F7():
    return PrimeField(7)


@pytest.fixture
def F4():
    return field_make("F2[w]/(w^2+w+1)")


@pytest.fixture
def omega(F4):
    return parse_element(F4, "w")


def poly(field, *coefficients):
    """Ascending coefficients given as ints or Fractions."""
    return Polynomial(field, tuple(field.from_fraction(Fraction(c)) for c in coefficients))


def rational_map(field, numerator, denominator=(1,)):
    return map_make(poly(field, *numerator), poly(field, *denominator))


def draw_mobius_steps(field, data, max_steps=2):
    """One to ``max_steps`` invertible Möbius maps drawn with hypothesis.

    Entries are field elements by index over finite fields and small
    integers otherwise.
    """
    if field.is_finite:
        entry = st.integers(min_value=0, max_value=field.order - 1).map(field.element_from_index)
    else:
        entry = st.integers(min_value=-4, max_value=4).map(field.from_int)
    rows = data.draw(st.lists(st.tuples(entry, entry, entry, entry), min_size=1, max_size=max_steps))
    steps = []
    for a, b, c, d in rows:
        assume(not field.is_zero(field.sub(field.mul(a, d), field.mul(b, c))))
        steps.append(Mobius.make(field, a, b, c, d))
    return steps


def step_composition(steps):
    """``(phi_k ∘ z^3) ∘ ... ∘ (phi_1 ∘ z^3)`` built one step at a time."""
    K = steps[0].field
    f = RationalMap.identity(K)
    for phi in steps:
        f = map_compose(map_compose(RationalMap.from_mobius(phi), RationalMap.power_map(K, 3)), f)
    return f


@pytest.fixture
def cube_Q(Q):
    return RationalMap.power_map(Q, 3)


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Point the global config manager at an empty file under tmp_path."""
    manager = ConfigManager(tmp_path / "config.yaml")
    for module in ("config.manager", "core.controller", "core.ramification.oracle", "core.constructors.covering", "main"):
        monkeypatch.setattr(f"{module}.config_manager", manager, raising=False)
    return manager

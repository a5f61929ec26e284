"""Belyi-type reduction of tame covers over finite fields.

Over a finite field every branch value is a root of unity or 0 or inf, so
a power map ``z**(p**n - 1)`` moves all branch values into {0, 1, inf}
without creating wild ramification.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Any, Iterable, Optional

from sympy import factorint
from sympy.ntheory import n_order

from core.exceptions import CharacteristicError, ConstructionError, NotFiniteFieldError, WildRamificationError
from core.fields.base import FieldDescriptor
from core.fields.extension import ExtensionField
from core.fields.factory import fresh_variable
from core.logging_config import get_logger
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap, map_compose
from core.ramification.profile import RamificationProfile, ramification_profile

logger = get_logger(__name__)


@dataclass(frozen=True)
class BelyiReduction:
    """``exponent`` is None when the branch locus already lies in {0, 1, inf}."""

    exponent: Optional[int]
    cover: RationalMap
    profile: RamificationProfile


def multiplicative_order(x: Any, field: FieldDescriptor) -> int:
    """Order of a nonzero element of a finite field."""
    N = field.order - 1
    order = N
    for prime, power in factorint(N).items():
        for _ in range(power):
            if order % prime == 0 and field.is_one(field.pow(x, order // prime)):
                order //= prime
    return order


def _is_special(point: ClosedPoint) -> bool:
    if point.is_infinity:
        return True
    if point.degree != 1:
        return False
    K = point.field
    root = K.neg(point.polynomial.coeffs[0])
    return K.is_zero(root) or K.is_one(root)


def minimal_power_exponent(branch: Iterable[ClosedPoint], field: FieldDescriptor) -> Optional[int]:
    """Smallest n with ``y**(p**n - 1)`` in {0, 1} for every finite branch value y.

    Returns None when no power map is needed.

    Raises:
        NotFiniteFieldError: If ``field`` is infinite.
    """
    if not field.is_finite:
        raise NotFiniteFieldError(f"power-map reduction needs a finite field, got {field.text}")
    p = field.characteristic
    points = [point for point in branch if not _is_special(point)]
    if not points:
        return None
    n = 1
    for point in points:
        m = point.polynomial
        if m.degree == 1:
            L, x = field, field.neg(m.coeffs[0])
        else:
            L = ExtensionField(field, m.coeffs, fresh_variable(field))
            x = L.generator
        order = multiplicative_order(x, L)
        if order > 1:
            n = lcm(n, int(n_order(p, order)))
    return n


def belyi_reduce(g: RationalMap, seed: int = 0) -> BelyiReduction:
    """Compose a tame cover with ``z**(p**n - 1)`` to land in {0, 1, inf}.

    Raises:
        CharacteristicError: In characteristic 0.
        NotFiniteFieldError: Over infinite fields of positive characteristic.
        WildRamificationError: If ``g`` is wildly ramified.
        ConstructionError: If the composed map fails verification.
    """
    K = g.field
    if K.characteristic == 0:
        raise CharacteristicError("power-map reduction is a positive-characteristic construction")
    if not K.is_finite:
        raise NotFiniteFieldError(f"power-map reduction needs a finite field, got {K.text}")
    profile = ramification_profile(g, seed)
    if not profile.all_tame:
        raise WildRamificationError(f"{g.render()} is wildly ramified")
    n = minimal_power_exponent(profile.branch_values, K)
    if n is None:
        return BelyiReduction(None, g, profile)
    p = K.characteristic
    h = map_compose(RationalMap.power_map(K, p ** n - 1), g)
    reduced = ramification_profile(h, seed)
    if not reduced.all_tame or not all(_is_special(point) for point in reduced.branch_values):
        raise ConstructionError(f"z^{p ** n - 1} did not move the branch locus into {{0, 1, inf}}")
    logger.info(f"power-map reduction with n={n}: degree {g.degree} -> {h.degree}")
    return BelyiReduction(n, h, reduced)

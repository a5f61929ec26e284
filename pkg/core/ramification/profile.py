"""Ramification profiles of rational maps.

Ramification points are read off the critical form ``W = P'Q - PQ'``: a
finite point x is ramified exactly when W(x) = 0, and the order of W at x is
the different exponent. Infinity carries exponent ``2d - 2 - deg W``.

Over finite fields every ramification point is computed exactly by factoring
W and adjoining a root of each factor. Over fields of characteristic 0 the
index is ``e = ord(W) + 1`` and closed points are grouped by branch value
with a resultant in the target coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from core.exceptions import CharacteristicError, InseparableMapError, NotFiniteFieldError
from core.fields.base import FieldDescriptor
from core.fields.extension import ExtensionField
from core.fields.factory import fresh_variable
from core.fields.rational import RationalField
from core.logging_config import get_logger
from core.poly.dense import dup_trailing_order
from core.poly.factor import closed_point_factors, factor_finite, minimal_polynomial, rational_roots
from core.poly.polynomial import Polynomial, lagrange_interpolate, poly_gcd, resultant
from core.poly.sqfree import squarefree_part
from core.projline.points import PointedCurve, ProjPoint
from core.projline.moduli import moduli_coordinates
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap, map_eval

logger = get_logger(__name__)


@dataclass(frozen=True)
class CriticalForm:
    """Wronskian ``W = P'Q - PQ'`` and the different exponent at infinity."""

    wronskian: Polynomial
    infinity_order: int

    def vanishes_at(self, x: ProjPoint) -> bool:
        if x.is_infinity:
            return self.infinity_order > 0
        return x.field.is_zero(self.wronskian(x.value))


def critical_form(f: RationalMap) -> CriticalForm:
    """Raises InseparableMapError when W is identically zero."""
    P, Q = f.numerator, f.denominator
    W = P.derivative() * Q - P * Q.derivative()
    if W.is_zero:
        raise InseparableMapError(f"{f.render()} is inseparable: its critical form vanishes")
    return CriticalForm(W, 2 * f.degree - 2 - W.degree)


@dataclass(frozen=True)
class RamificationEntry:
    point: ClosedPoint
    residue_degree: int
    e: int
    different_exponent: int
    tame: bool
    branch_value: ClosedPoint


@dataclass(frozen=True)
class RamificationProfile:
    """All ramification points of a separable map, sorted with infinity last."""

    field: FieldDescriptor
    degree: int
    entries: Tuple[RamificationEntry, ...]

    @property
    def all_tame(self) -> bool:
        return all(entry.tame for entry in self.entries)

    @property
    def triple_only(self) -> bool:
        return all(entry.e == 3 and entry.tame for entry in self.entries)

    @property
    def geometric_count(self) -> int:
        """Number of geometric ramification points."""
        return sum(entry.residue_degree for entry in self.entries)

    @property
    def different_degree(self) -> int:
        return sum(entry.residue_degree * entry.different_exponent for entry in self.entries)

    @property
    def tame_sum(self) -> int:
        return sum(entry.residue_degree * (entry.e - 1) for entry in self.entries)

    @property
    def rh_consistent(self) -> bool:
        """Riemann-Hurwitz for P^1 -> P^1: total ramification ``2d - 2``.

        Tame maps must satisfy it with ``e - 1``; wild maps with the
        different exponents.
        """
        target = 2 * self.degree - 2
        if self.different_degree != target:
            return False
        return not self.all_tame or self.tame_sum == target

    @property
    def branch_values(self) -> Tuple[ClosedPoint, ...]:
        unique = {entry.branch_value for entry in self.entries}
        return tuple(sorted(unique, key=lambda point: point.sort_key))


def _sorted_entries(entries: List[RamificationEntry]) -> Tuple[RamificationEntry, ...]:
    return tuple(sorted(entries, key=lambda entry: entry.point.sort_key))


def _branch_over(y: ProjPoint, base: FieldDescriptor) -> ClosedPoint:
    """Closed point of ``base`` below the geometric point ``y``."""
    if y.is_infinity:
        return ClosedPoint.infinity(base)
    if y.field == base:
        return ClosedPoint.rational(base, y.value)
    return ClosedPoint(base, minimal_polynomial(y.value, y.field, base))


def _tame(e: int, characteristic: int) -> bool:
    return characteristic == 0 or e % characteristic != 0


def _infinity_entry(f: RationalMap, form: CriticalForm) -> RamificationEntry:
    K = f.field
    y = map_eval(f, ProjPoint.infinity(K))
    fiber = f.reversed().fiber_polynomial(y)
    e = dup_trailing_order(fiber.coeffs, K)
    return RamificationEntry(
        ClosedPoint.infinity(K), 1, e, form.infinity_order, _tame(e, K.characteristic), ClosedPoint.from_point(y)
    )


def _finite_field_entries(f: RationalMap, form: CriticalForm, seed: int) -> List[RamificationEntry]:
    K = f.field
    entries = []
    for m, multiplicity in factor_finite(form.wronskian, seed).factors:
        if m.degree == 1:
            L, x = K, K.neg(m.coeffs[0])
        else:
            L = ExtensionField(K, m.coeffs, fresh_variable(K))
            x = L.generator
        f_L = f.embed(L)
        y = map_eval(f_L, ProjPoint(L, x))
        e = f_L.fiber_polynomial(y).root_multiplicity(x)
        entries.append(
            RamificationEntry(
                ClosedPoint(K, m), m.degree, e, multiplicity, _tame(e, K.characteristic), _branch_over(y, K)
            )
        )
    return entries


def branch_value_polynomial(f: RationalMap, g: Polynomial) -> Polynomial:
    """Monic ``B(Y) = Res(g, P - Y*Q)`` whose roots are the images of the roots of g.

    ``g`` must be monic and coprime to Q. B is obtained by interpolation at
    ``Y = 0, ..., deg g``; characteristic 0 keeps these nodes distinct.
    """
    K = f.field
    nodes = [K.from_int(j) for j in range(g.degree + 1)]
    values = [resultant(g, f.numerator - f.denominator.scale(y)).payload for y in nodes]
    return lagrange_interpolate(K, nodes, values).monic()


def _split_by_branch_value(f: RationalMap, g: Polynomial) -> List[Tuple[Polynomial, ClosedPoint]]:
    K = f.field
    if g.degree == 1:
        y = map_eval(f, ProjPoint(K, K.neg(g.coeffs[0])))
        return [(g, ClosedPoint.from_point(y))]
    pieces = []
    poles = poly_gcd(g, f.denominator)
    if poles.degree > 0:
        pieces.append((poles, ClosedPoint.infinity(K)))
        g = g.exquo(poles)
    if g.degree < 1:
        return pieces
    if isinstance(K, RationalField):
        B = squarefree_part(branch_value_polynomial(f, g))
        for y, _ in rational_roots(B):
            piece = poly_gcd(g, f.numerator - f.denominator.scale(y))
            if piece.degree > 0:
                pieces.append((piece, ClosedPoint.rational(K, y)))
                g = g.exquo(piece)
        if g.degree < 1:
            return pieces
    pieces.append((g, ClosedPoint(K, squarefree_part(branch_value_polynomial(f, g)))))
    return pieces


def _characteristic_zero_entries(f: RationalMap, form: CriticalForm) -> List[RamificationEntry]:
    entries = []
    for g, multiplicity in closed_point_factors(form.wronskian):
        for piece, branch in _split_by_branch_value(f, g):
            entries.append(RamificationEntry(ClosedPoint(f.field, piece), piece.degree, multiplicity + 1, multiplicity, True, branch))
    return entries


def ramification_profile(f: RationalMap, seed: int = 0) -> RamificationProfile:
    """Ramification profile of a separable map.

    Args:
        f: The map.
        seed: Seed for the equal-degree factorization over finite fields.

    Raises:
        InseparableMapError: If the critical form vanishes identically.
        NotFiniteFieldError: Over infinite fields of positive characteristic.
    """
    K = f.field
    form = critical_form(f)
    if K.is_finite:
        entries = _finite_field_entries(f, form, seed)
    elif K.characteristic == 0:
        entries = _characteristic_zero_entries(f, form)
    else:
        raise NotFiniteFieldError(f"ramification over {K.text} needs a finite field or characteristic 0")
    if form.infinity_order > 0:
        entries.append(_infinity_entry(f, form))
    profile = RamificationProfile(K, f.degree, _sorted_entries(entries))
    logger.debug(f"profile of degree {f.degree} map over {K.text}: {len(profile.entries)} closed points")
    return profile


def is_triple_only(f: RationalMap, seed: int = 0) -> Tuple[bool, RamificationProfile]:
    """Whether every ramification point has index exactly 3.

    A triple-only map of degree d has exactly ``d - 1`` geometric
    ramification points; both conditions are checked.

    Raises:
        CharacteristicError: In characteristic 3, where index 3 is wild.
    """
    if f.field.characteristic == 3:
        raise CharacteristicError("index-3 ramification is wild in characteristic 3")
    profile = ramification_profile(f, seed)
    verdict = profile.triple_only and profile.geometric_count == f.degree - 1
    return verdict, profile


def branch_points(f: RationalMap, seed: int = 0) -> Tuple[ClosedPoint, ...]:
    return ramification_profile(f, seed).branch_values


@dataclass(frozen=True)
class RamificationMarking:
    """Rational ramification points above given branch values."""

    points: Tuple[Optional[ProjPoint], ...]
    coordinates: Optional[Tuple[Any, ...]]


def ramification_marking(f: RationalMap, branch: Tuple[ProjPoint, ...], seed: int = 0) -> RamificationMarking:
    """For each branch value pick the rational ramification point above it.

    ``points[i]`` is None when the ramification above ``branch[i]`` is not
    rational. With at least three rational points the marking's moduli
    coordinates are returned as well.
    """
    profile = ramification_profile(f, seed)
    chosen: List[Optional[ProjPoint]] = []
    for y in branch:
        target = ClosedPoint.from_point(y)
        point = next(
            (entry.point.rational_point for entry in profile.entries
             if entry.branch_value == target and entry.residue_degree == 1),
            None,
        )
        chosen.append(point)
    coordinates = None
    if len(chosen) >= 3 and all(p is not None for p in chosen):
        coordinates = tuple(moduli_coordinates(PointedCurve.of(chosen)))
    return RamificationMarking(tuple(chosen), coordinates)

"""The cubic family ``x**3 = y**2 - t*y`` and its projection to the y-line.

For ``t != 0`` the fiber is an elliptic curve with j-invariant 0 and the
projection ``(x, y) -> y`` is a triple cover of P^1 branched over 0, t and
inf. At ``t = 0`` the two finite branch points collide and the curve
acquires a cusp at ``[0, 0, 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from core.exceptions import CharacteristicError, CurveError, NotFiniteFieldError, SingularFiberError
from core.fields.base import FieldDescriptor
from core.fields.element import FieldElement
from core.logging_config import get_logger
from core.poly.factor import closed_point_factors
from core.poly.polynomial import Polynomial, poly_gcd
from core.projline.points import ProjPoint
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap
from core.ramification.profile import RamificationProfile, ramification_profile

logger = get_logger(__name__)


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6``."""

    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    @classmethod
    def from_coefficients(cls, field: FieldDescriptor, *coefficients) -> "WeierstrassCurve":
        return cls(*(FieldElement.of(field, c) for c in coefficients))

    @classmethod
    def family_member(cls, t: FieldElement) -> "WeierstrassCurve":
        """``x**3 = y**2 - t*y`` in long form: ``a3 = -t``, all other coefficients 0."""
        zero = FieldElement(t.field, t.field.zero)
        return cls(zero, zero, -t, zero, zero)

    @property
    def field(self) -> FieldDescriptor:
        return self.a1.field

    @property
    def b2(self) -> FieldElement:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> FieldElement:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> FieldElement:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> FieldElement:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> FieldElement:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def discriminant(self) -> FieldElement:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def is_smooth(self) -> bool:
        return not self.discriminant.is_zero()

    @property
    def j_invariant(self) -> FieldElement:
        """Raises SingularFiberError when the discriminant vanishes."""
        delta = self.discriminant
        if delta.is_zero():
            raise SingularFiberError("discriminant is zero: the curve is singular")
        c4 = self.c4
        return c4 * c4 * c4 / delta


def _require_characteristic(t: FieldElement) -> None:
    if t.field.characteristic == 3:
        raise CharacteristicError("the family degenerates in characteristic 3")


def branch_divisor(t: FieldElement) -> List[Tuple[ProjPoint, int]]:
    """Branch divisor of the y-projection: the zeros of ``y*(y - t)`` plus inf."""
    _require_characteristic(t)
    K = t.field
    product = Polynomial(K, (K.zero, K.neg(t.payload), K.one))
    roots = [K.zero] if t.is_zero() else [K.zero, t.payload]
    divisor = [(ProjPoint(K, root), product.root_multiplicity(root)) for root in roots]
    divisor.append((ProjPoint.infinity(K), 1))
    return divisor


@dataclass(frozen=True)
class FiberPoint:
    """A closed point of a fiber of the y-projection.

    ``x`` is the closed point of the x-line, None for ``[0, 1, 0]``.
    """

    x: Optional[ClosedPoint]
    residue_degree: int
    e: int

    def label(self) -> str:
        return "[0,1,0]" if self.x is None else self.x.render()


def fiber_analysis(t: FieldElement, c: ProjPoint) -> Tuple[FiberPoint, ...]:
    """Points over ``y = c`` with their ramification indices.

    The fiber is ``x**3 = c**2 - t*c``; it is totally ramified exactly over
    the branch points. Over infinite fields of positive characteristic the
    unramified fiber is reported as one closed point.
    """
    _require_characteristic(t)
    K = t.field
    if c.field != K:
        raise CurveError(f"fiber value lives over {c.field.text}, expected {K.text}")
    if c.is_infinity:
        return (FiberPoint(None, 1, 3),)
    k = K.sub(K.mul(c.value, c.value), K.mul(t.payload, c.value))
    if K.is_zero(k):
        return (FiberPoint(ClosedPoint.rational(K, K.zero), 1, 3),)
    cubic = Polynomial(K, (K.neg(k), K.zero, K.zero, K.one))
    try:
        factors = closed_point_factors(cubic)
    except NotFiniteFieldError:
        factors = ((cubic, 1),)
    return tuple(FiberPoint(ClosedPoint(K, m), m.degree, multiplicity) for m, multiplicity in factors)


@dataclass(frozen=True)
class SingularLocus:
    smooth: bool
    point: Optional[Tuple[FieldElement, FieldElement, FieldElement]] = None
    kind: Optional[str] = None

    def point_label(self) -> Optional[str]:
        if self.point is None:
            return None
        return "[" + ",".join(str(c) for c in self.point) + "]"


def singular_locus(t: FieldElement) -> SingularLocus:
    """Jacobian criterion on ``F = x^3 - y^2*z + t*y*z^2``.

    Any singular point satisfies ``x = 0`` and ``y*z*(y - t*z) = 0``, which
    leaves the candidates ``[0,1,0]``, ``[0,0,1]`` and ``[0,t,1]``.
    """
    _require_characteristic(t)
    K = t.field
    zero, one = FieldElement(K, K.zero), FieldElement(K, K.one)
    candidates = [(zero, one, zero), (zero, zero, one)]
    if not t.is_zero():
        candidates.append((zero, t, one))
    for x, y, z in candidates:
        F = x * x * x - y * y * z + t * y * z * z
        gradient = (3 * x * x, -2 * y * z + t * z * z, -y * y + 2 * t * y * z)
        if F.is_zero() and all(g.is_zero() for g in gradient):
            return SingularLocus(False, (x, y, z), _classify(x, z))
    return SingularLocus(True)


def tangent_cone_kind(a: FieldElement, b: FieldElement, c: FieldElement) -> str:
    """``"cusp"`` when ``a*X^2 + b*X*Y + c*Y^2`` is a constant times a square, else ``"node"``.

    A binary quadratic form is a square over the algebraic closure exactly
    when ``q(X, 1)`` has a repeated root or degree below 1. The repeated root
    shows up as a common factor of q and q', or as ``q' = 0`` in
    characteristic 2.
    """
    K = a.field
    if a.is_zero() and b.is_zero() and c.is_zero():
        raise CurveError("tangent cone has degree above 2")
    if a.is_zero():
        # Y * (b*X + c*Y)
        return "cusp" if b.is_zero() else "node"
    q = Polynomial(K, (c.payload, b.payload, a.payload))
    dq = q.derivative()
    if dq.is_zero or poly_gcd(q, dq).degree > 0:
        return "cusp"
    return "node"


def _classify(x: FieldElement, z: FieldElement) -> str:
    if z.is_zero():
        raise CurveError("singular point at infinity")
    # Quadratic part of x^3 - y^2 + t*y at the singular point (x, y).
    K = x.field
    return tangent_cone_kind(3 * x, FieldElement(K, K.zero), FieldElement.of(K, -1))


def j_invariant(t: FieldElement) -> FieldElement:
    """Raises SingularFiberError at ``t = 0``."""
    _require_characteristic(t)
    if t.is_zero():
        raise SingularFiberError("t = 0: the fiber is a rational curve with a cusp")
    return WeierstrassCurve.family_member(t).j_invariant


@dataclass(frozen=True)
class GenusReport:
    geometric: int
    arithmetic: int
    delta: int

    @property
    def smooth(self) -> bool:
        return self.delta == 0


@dataclass(frozen=True)
class CuspCheck:
    """The parametrization ``(x, y) = (s^2, s^3)`` of the cuspidal fiber."""

    satisfies_equation: bool
    pullback: RationalMap
    index_at_origin: int
    profile: RamificationProfile


def cusp_parametrization(field: FieldDescriptor) -> CuspCheck:
    _require_characteristic(FieldElement(field, field.zero))
    x = Polynomial.monomial(field, 2)
    y = Polynomial.monomial(field, 3)
    residual = x * x * x - y * y
    pullback = RationalMap.power_map(field, 3)
    profile = ramification_profile(pullback)
    origin = ClosedPoint.rational(field, field.zero)
    index = next(entry.e for entry in profile.entries if entry.point == origin)
    return CuspCheck(residual.is_zero, pullback, index, profile)


def rh_genus(t: FieldElement) -> GenusReport:
    """Genus from Riemann-Hurwitz for the degree-3 y-projection.

    Smooth fibers give ``2g - 2 = 3*(-2) + sum(e - 1)``. The cuspidal fiber
    reports the genus of its normalization ``s -> (s^2, s^3)`` and the
    delta-invariant 1 of the cusp.
    """
    _require_characteristic(t)
    if t.is_zero():
        profile = cusp_parametrization(t.field).profile
        geometric = (3 * -2 + profile.tame_sum + 2) // 2
        return GenusReport(geometric, geometric + 1, 1)
    total = 0
    for point, _ in branch_divisor(t):
        total += sum(q.residue_degree * (q.e - 1) for q in fiber_analysis(t, point))
    genus = (3 * -2 + total + 2) // 2
    logger.debug(f"t={t}: ramification total {total}, genus {genus}")
    return GenusReport(genus, genus, 0)

"""Finite self-maps of the projective line."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from core.exceptions import ConstantMapError, FieldMismatchError, MapError
from core.fields.base import FieldDescriptor
from core.poly.polynomial import Polynomial, poly_gcd
from core.projline.mobius import Mobius
from core.projline.points import PointedCurve, ProjPoint


@dataclass(frozen=True)
class RationalMap:
    """``z -> P(z)/Q(z)`` with coprime P, Q.

    Canonical form: Q is monic when it is nonconstant, otherwise Q = 1.
    Instances come from ``map_make`` or the constructors below.
    """

    numerator: Polynomial
    denominator: Polynomial

    @property
    def field(self) -> FieldDescriptor:
        return self.numerator.field

    @property
    def degree(self) -> int:
        return max(len(self.numerator.coeffs), len(self.denominator.coeffs)) - 1

    @classmethod
    def identity(cls, field: FieldDescriptor) -> "RationalMap":
        return cls(Polynomial.variable(field), Polynomial.one(field))

    @classmethod
    def power_map(cls, field: FieldDescriptor, n: int) -> "RationalMap":
        """``z -> z**n``."""
        if n < 1:
            raise MapError(f"power map needs a positive exponent, got {n}")
        return cls(Polynomial.monomial(field, n), Polynomial.one(field))

    @classmethod
    def from_mobius(cls, phi: Mobius) -> "RationalMap":
        K = phi.field
        return map_make(Polynomial(K, (phi.b, phi.a)), Polynomial(K, (phi.d, phi.c)))

    def fiber_polynomial(self, y: ProjPoint) -> Polynomial:
        """``P - y*Q`` for finite ``y`` and ``Q`` for ``y = inf``.

        Its roots are the finite points of the fiber over ``y``.
        """
        if y.field != self.field:
            raise FieldMismatchError(f"{self.field.text} vs {y.field.text}")
        if y.is_infinity:
            return self.denominator
        return self.numerator - self.denominator.scale(y.value)

    def reversed(self) -> "RationalMap":
        """The map ``w -> f(1/w)``, which moves the source point inf to 0."""
        d = self.degree
        return map_make(self.numerator.reverse(d), self.denominator.reverse(d))

    def embed(self, field: FieldDescriptor) -> "RationalMap":
        if field == self.field:
            return self
        return RationalMap(self.numerator.embed(field), self.denominator.embed(field))

    def __call__(self, x: ProjPoint) -> ProjPoint:
        return map_eval(self, x)

    def render(self, var: str = "z") -> str:
        num = self.numerator.render(var)
        if self.denominator.is_constant:
            return num
        return f"({num})/({self.denominator.render(var)})"

    def __str__(self) -> str:
        return self.render()


def map_make(P: Polynomial, Q: Polynomial) -> RationalMap:
    """Canonical coprime form of ``P/Q``.

    Raises:
        FieldMismatchError: If P and Q live over different fields.
        ConstantMapError: If the quotient is constant (including ``c/0``).
        MapError: If both polynomials are zero.
    """
    if P.field != Q.field:
        raise FieldMismatchError(f"{P.field.text} vs {Q.field.text}")
    if Q.is_zero:
        if P.is_zero:
            raise MapError("0/0 does not define a map")
        raise ConstantMapError("zero denominator: the constant map inf")
    g = poly_gcd(P, Q)
    if g.degree > 0:
        P, Q = P.exquo(g), Q.exquo(g)
    inv = P.field.inv(Q.lc)
    P, Q = P.scale(inv), Q.scale(inv)
    if max(len(P.coeffs), len(Q.coeffs)) < 2:
        raise ConstantMapError(f"constant map {P.render()}")
    return RationalMap(P, Q)


def map_eval(f: RationalMap, x: ProjPoint) -> ProjPoint:
    """Value of ``f`` at ``x`` by homogeneous evaluation."""
    if x.field != f.field:
        raise FieldMismatchError(f"{f.field.text} vs {x.field.text}")
    K = f.field
    if x.is_infinity:
        d = f.degree
        return ProjPoint.from_pair(K, f.numerator.coefficient(d), f.denominator.coefficient(d))
    return ProjPoint.from_pair(K, f.numerator(x.value), f.denominator(x.value))


def map_compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """``f ∘ g`` of degree ``deg f * deg g``."""
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field.text} vs {g.field.text}")
    K = f.field
    d = f.degree
    A, B = g.numerator, g.denominator
    a_powers = [Polynomial.one(K)]
    b_powers = [Polynomial.one(K)]
    for _ in range(d):
        a_powers.append(a_powers[-1] * A)
        b_powers.append(b_powers[-1] * B)
    num = Polynomial.zero(K)
    den = Polynomial.zero(K)
    for i in range(d + 1):
        p_i, q_i = f.numerator.coefficient(i), f.denominator.coefficient(i)
        if K.is_zero(p_i) and K.is_zero(q_i):
            continue
        term = a_powers[i] * b_powers[d - i]
        num = num + term.scale(p_i)
        den = den + term.scale(q_i)
    return map_make(num, den)


def map_compose_all(maps: Iterable[RationalMap]) -> RationalMap:
    """Compose left to right: ``[f, g, h] -> f ∘ g ∘ h``."""
    maps = list(maps)
    if not maps:
        raise MapError("nothing to compose")
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = map_compose(f, result)
    return result


def push_forward(f: RationalMap, curve: Union[PointedCurve, Iterable[ProjPoint]]) -> PointedCurve:
    """Image ``(f(x1), ..., f(xn))`` of a pointed curve.

    Raises:
        BoundaryPointError: If two images coincide; the induced map on
            moduli is not defined there.
    """
    points = curve.points if isinstance(curve, PointedCurve) else tuple(curve)
    return PointedCurve.of(map_eval(f, x) for x in points)

"""Möbius transformations, the action of PGL2 on the projective line."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Tuple

from core.exceptions import FieldMismatchError, ProjectiveLineError
from core.fields.base import FieldDescriptor, embed_payload
from core.projline.points import ProjPoint


@dataclass(frozen=True)
class Mobius:
    """``w -> (a*w + b) / (c*w + d)`` scaled so the first nonzero entry is 1.

    Build instances through ``Mobius.make``, which checks the determinant
    and applies the canonical scaling.
    """

    field: FieldDescriptor
    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def make(cls, field: FieldDescriptor, a: Any, b: Any, c: Any, d: Any) -> "Mobius":
        K = field
        if K.is_zero(K.sub(K.mul(a, d), K.mul(b, c))):
            raise ProjectiveLineError("Möbius matrix is singular")
        lead = next(x for x in (a, b, c, d) if not K.is_zero(x))
        if not K.is_one(lead):
            inv = K.inv(lead)
            a, b, c, d = (K.mul(x, inv) for x in (a, b, c, d))
        return cls(field, a, b, c, d)

    @classmethod
    def identity(cls, field: FieldDescriptor) -> "Mobius":
        return cls(field, field.one, field.zero, field.zero, field.one)

    @classmethod
    def from_ints(cls, field: FieldDescriptor, a: int, b: int, c: int, d: int) -> "Mobius":
        return cls.make(field, *(field.from_int(x) for x in (a, b, c, d)))

    @property
    def entries(self) -> Tuple[Any, Any, Any, Any]:
        return self.a, self.b, self.c, self.d

    @property
    def is_identity(self) -> bool:
        return self == Mobius.identity(self.field)

    def apply(self, point: ProjPoint) -> ProjPoint:
        return mobius_apply(self, point)

    def __call__(self, point: ProjPoint) -> ProjPoint:
        return mobius_apply(self, point)

    def compose(self, other: "Mobius") -> "Mobius":
        """``self ∘ other``."""
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.text} vs {other.field.text}")
        K = self.field
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mobius.make(
            K,
            K.add(K.mul(a, e), K.mul(b, g)),
            K.add(K.mul(a, f), K.mul(b, h)),
            K.add(K.mul(c, e), K.mul(d, g)),
            K.add(K.mul(c, f), K.mul(d, h)),
        )

    def inverse(self) -> "Mobius":
        K = self.field
        return Mobius.make(K, self.d, K.neg(self.b), K.neg(self.c), self.a)

    def embed(self, field: FieldDescriptor) -> "Mobius":
        return Mobius(field, *(embed_payload(self.field, field, x) for x in self.entries))

    def to_json(self) -> list:
        return [self.field.to_json(x) for x in self.entries]

    def render(self, var: str = "w") -> str:
        K = self.field
        a, b, c, d = (K.render(x) for x in self.entries)
        return f"(({a})*{var}+({b}))/(({c})*{var}+({d}))"


def mobius_apply(phi: Mobius, point: ProjPoint) -> ProjPoint:
    """``[u : v] -> [a*u + b*v : c*u + d*v]``."""
    if point.field != phi.field:
        raise FieldMismatchError(f"{phi.field.text} vs {point.field.text}")
    K = phi.field
    if point.is_infinity:
        return ProjPoint.from_pair(K, phi.a, phi.c)
    u = point.value
    return ProjPoint.from_pair(K, K.add(K.mul(phi.a, u), phi.b), K.add(K.mul(phi.c, u), phi.d))


def _det(x: Tuple[Any, Any], y: Tuple[Any, Any], K) -> Any:
    return K.sub(K.mul(x[0], y[1]), K.mul(x[1], y[0]))


def mobius_from_three(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Mobius:
    """The unique transformation sending ``a, b, c`` to ``0, 1, inf``.

    In homogeneous coordinates it maps ``W`` to
    ``[det(W, A) * det(B, C) : det(W, C) * det(B, A)]``.

    Raises:
        ProjectiveLineError: If two of the points coincide.
    """
    K = a.field
    if b.field != K or c.field != K:
        raise FieldMismatchError("points live over different fields")
    if a == b or b == c or a == c:
        raise ProjectiveLineError("normalization needs three distinct points")
    A, B, C = a.pair, b.pair, c.pair
    k1 = _det(B, C, K)
    k2 = _det(B, A, K)
    return Mobius.make(
        K,
        K.mul(A[1], k1),
        K.neg(K.mul(A[0], k1)),
        K.mul(C[1], k2),
        K.neg(K.mul(C[0], k2)),
    )

"""Closed points of the projective line over a ground field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Tuple

from core.exceptions import MapError
from core.fields.base import FieldDescriptor
from core.poly.polynomial import Polynomial
from core.projline.points import INFINITY_TOKEN, ProjPoint


@dataclass(frozen=True)
class ClosedPoint:
    """A Galois orbit of geometric points.

    Finite orbits are given by their monic defining polynomial; ``polynomial``
    None is the point at infinity. Over finite fields the polynomial is
    irreducible, over Q it is squarefree.
    """

    field: FieldDescriptor
    polynomial: Optional[Polynomial]

    def __post_init__(self) -> None:
        if self.polynomial is not None:
            if self.polynomial.degree < 1 or not self.polynomial.is_monic:
                raise MapError("closed points need a monic nonconstant polynomial")

    @classmethod
    def infinity(cls, field: FieldDescriptor) -> "ClosedPoint":
        return cls(field, None)

    @classmethod
    def rational(cls, field: FieldDescriptor, value: Any) -> "ClosedPoint":
        return cls(field, Polynomial.linear(field, value))

    @classmethod
    def from_point(cls, point: ProjPoint) -> "ClosedPoint":
        if point.is_infinity:
            return cls.infinity(point.field)
        return cls.rational(point.field, point.value)

    @property
    def is_infinity(self) -> bool:
        return self.polynomial is None

    @property
    def degree(self) -> int:
        return 1 if self.polynomial is None else self.polynomial.degree

    @property
    def rational_point(self) -> Optional[ProjPoint]:
        """The point itself when it is rational."""
        if self.polynomial is None:
            return ProjPoint.infinity(self.field)
        if self.polynomial.degree == 1:
            return ProjPoint(self.field, self.field.neg(self.polynomial.coeffs[0]))
        return None

    @property
    def sort_key(self) -> Tuple[int, str]:
        if self.polynomial is None:
            return 1, ""
        return 0, self.polynomial.coefficient_string

    def to_json(self) -> Any:
        return INFINITY_TOKEN if self.polynomial is None else self.polynomial.to_json()

    def render(self) -> str:
        if self.polynomial is None:
            return INFINITY_TOKEN
        point = self.rational_point
        return point.render() if point is not None else f"roots of {self.polynomial.render()}"

    def __str__(self) -> str:
        return self.render()

"""Points of the projective line and pointed rational curves."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Tuple

from core.exceptions import BoundaryPointError, FieldMismatchError, ProjectiveLineError
from core.fields.base import FieldDescriptor, embed_payload
from core.fields.element import FieldElement
from core.fields.factory import parse_element

INFINITY_TOKEN = "inf"


@dataclass(frozen=True)
class ProjPoint:
    """A point ``[u : v]`` of P^1 in canonical form.

    ``value`` holds the affine coordinate ``u`` of ``[u : 1]``; the point
    ``[1 : 0]`` at infinity has ``value`` None.
    """

    field: FieldDescriptor
    value: Optional[Any]

    @classmethod
    def infinity(cls, field: FieldDescriptor) -> "ProjPoint":
        return cls(field, None)

    @classmethod
    def affine(cls, field: FieldDescriptor, value: Any) -> "ProjPoint":
        if isinstance(value, FieldElement):
            if value.field != field:
                raise FieldMismatchError(f"{value.field.text} vs {field.text}")
            value = value.payload
        elif isinstance(value, int) and not isinstance(value, bool):
            value = field.from_int(value)
        return cls(field, value)

    @classmethod
    def from_pair(cls, field: FieldDescriptor, u: Any, v: Any) -> "ProjPoint":
        """Canonical point of the homogeneous pair ``(u, v)``."""
        if field.is_zero(v):
            if field.is_zero(u):
                raise ProjectiveLineError("[0 : 0] is not a point of the projective line")
            return cls(field, None)
        return cls(field, field.div(u, v))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    @property
    def pair(self) -> Tuple[Any, Any]:
        if self.value is None:
            return self.field.one, self.field.zero
        return self.value, self.field.one

    @property
    def element(self) -> FieldElement:
        if self.value is None:
            raise ProjectiveLineError("the point at infinity has no affine coordinate")
        return FieldElement(self.field, self.value)

    def embed(self, field: FieldDescriptor) -> "ProjPoint":
        if self.value is None:
            return ProjPoint(field, None)
        return ProjPoint(field, embed_payload(self.field, field, self.value))

    def to_json(self) -> Any:
        return INFINITY_TOKEN if self.value is None else self.field.to_json(self.value)

    def render(self) -> str:
        return INFINITY_TOKEN if self.value is None else self.field.render(self.value)

    def __str__(self) -> str:
        return self.render()


def parse_point(field: FieldDescriptor, text: str) -> ProjPoint:
    """Parse ``inf`` or an element of ``field``."""
    if text.strip() == INFINITY_TOKEN:
        return ProjPoint.infinity(field)
    return ProjPoint(field, parse_element(field, text).payload)


def point_from_json(field: FieldDescriptor, value: Any) -> ProjPoint:
    if value == INFINITY_TOKEN:
        return ProjPoint.infinity(field)
    return ProjPoint(field, field.from_json(value))


@dataclass(frozen=True)
class PointedCurve:
    """P^1 with n >= 3 pairwise distinct marked points over one field."""

    points: Tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if len(points) < 3:
            raise ProjectiveLineError(f"a pointed curve needs at least 3 points, got {len(points)}")
        field = points[0].field
        if any(p.field != field for p in points):
            raise FieldMismatchError("marked points live over different fields")
        seen = set()
        for i, p in enumerate(points):
            if p in seen:
                raise BoundaryPointError(
                    f"marked point {i + 1} ({p.render()}) repeats an earlier point: boundary point of M0,{len(points)}"
                )
            seen.add(p)

    @classmethod
    def of(cls, points: Iterable[ProjPoint]) -> "PointedCurve":
        return cls(tuple(points))

    @property
    def field(self) -> FieldDescriptor:
        return self.points[0].field

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> list:
        return [p.to_json() for p in self.points]

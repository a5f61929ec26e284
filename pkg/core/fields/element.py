"""Field elements bound to their descriptor."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from core.exceptions import FieldError, FieldMismatchError
from core.fields.base import FieldDescriptor

_OPS = ("add", "sub", "mul", "div")


@dataclass(frozen=True)
class FieldElement:
    """An element of ``field`` with canonical ``payload``."""

    field: FieldDescriptor
    payload: Any

    @classmethod
    def of(cls, field: FieldDescriptor, value: Any) -> "FieldElement":
        """Build from an int, a Fraction or a raw payload."""
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(field, field.from_int(value))
        if hasattr(value, "denominator") and hasattr(value, "numerator"):
            return cls(field, field.from_fraction(value))
        return cls(field, field.canonical(value))

    def _coerce(self, other: Any) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.text} vs {other.field.text}")
            return other
        return FieldElement.of(self.field, other)

    def __add__(self, other: Any) -> "FieldElement":
        return arith(self, self._coerce(other), "add")

    def __radd__(self, other: Any) -> "FieldElement":
        return arith(self._coerce(other), self, "add")

    def __sub__(self, other: Any) -> "FieldElement":
        return arith(self, self._coerce(other), "sub")

    def __rsub__(self, other: Any) -> "FieldElement":
        return arith(self._coerce(other), self, "sub")

    def __mul__(self, other: Any) -> "FieldElement":
        return arith(self, self._coerce(other), "mul")

    def __rmul__(self, other: Any) -> "FieldElement":
        return arith(self._coerce(other), self, "mul")

    def __truediv__(self, other: Any) -> "FieldElement":
        return arith(self, self._coerce(other), "div")

    def __rtruediv__(self, other: Any) -> "FieldElement":
        return arith(self._coerce(other), self, "div")

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.payload))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.payload, n))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.payload)

    def to_json(self) -> Any:
        return self.field.to_json(self.payload)

    def __str__(self) -> str:
        return self.field.render(self.payload)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact ``a op b`` for ``op`` in add, sub, mul, div.

    Raises:
        FieldMismatchError: If the operands live over different fields.
        DivisionByZeroError: On division by zero.
    """
    if op not in _OPS:
        raise FieldError(f"unknown operation {op!r}")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.text} vs {b.field.text}")
    return FieldElement(a.field, getattr(a.field, op)(a.payload, b.payload))


def invert(a: FieldElement) -> FieldElement:
    """Multiplicative inverse of a nonzero element."""
    return FieldElement(a.field, a.field.inv(a.payload))

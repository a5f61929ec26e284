"""The field of rational numbers."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from core.exceptions import DivisionByZeroError, FieldError
from core.fields.base import FieldDescriptor

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


@dataclass(frozen=True)
class RationalField(FieldDescriptor):
    """Q with ``fractions.Fraction`` payloads."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def order(self) -> Optional[int]:
        return None

    @property
    def text(self) -> str:
        return "Q"

    @property
    def variables(self) -> Tuple[str, ...]:
        return ()

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise DivisionByZeroError("division by zero in Q")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise DivisionByZeroError("division by zero in Q")
        return a / b

    def pow(self, a: Fraction, n: int) -> Fraction:
        if n < 0 and a == 0:
            raise DivisionByZeroError("division by zero in Q")
        return a ** n

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, value: Any) -> Fraction:
        return Fraction(value)

    def canonical(self, a: Any) -> Fraction:
        return Fraction(a)

    def element_from_index(self, index: int) -> Fraction:
        """0, 1, -1, 1/2, -1/2, 2, -2, ... following the Calkin-Wilf sequence."""
        if index == 0:
            return Fraction(0)
        k, negative = (index + 1) // 2, index % 2 == 0
        a, b = 1, 1
        for bit in bin(k)[3:]:
            if bit == "0":
                a, b = a, a + b
            else:
                a, b = a + b, b
        value = Fraction(a, b)
        return -value if negative else value

    def random_element(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-30, 30), rng.randint(1, 12))

    def to_json(self, a: Fraction) -> str:
        return str(a)

    def from_json(self, value: Any) -> Fraction:
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if not isinstance(value, str) or not _RATIONAL_RE.match(value.strip()):
            raise FieldError(f"not a rational number: {value!r}")
        num, _, den = value.strip().partition("/")
        if den and int(den) == 0:
            raise DivisionByZeroError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)

    def render(self, a: Fraction) -> str:
        return str(a)

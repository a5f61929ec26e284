"""Prime fields F_p."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from sympy import isprime

from core.exceptions import DivisionByZeroError, FieldError
from core.fields.base import FieldDescriptor


@dataclass(frozen=True)
class PrimeField(FieldDescriptor):
    """F_p with residues in ``range(p)`` as payloads."""

    p: int

    is_prime_field = True

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise FieldError(f"F{self.p}: {self.p} is not a prime")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> Optional[int]:
        return self.p

    @property
    def text(self) -> str:
        return f"F{self.p}"

    @property
    def variables(self) -> Tuple[str, ...]:
        return ()

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZeroError(f"division by zero in {self.text}")
        return pow(a, -1, self.p)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def from_int(self, n: int) -> int:
        return n % self.p

    def canonical(self, a: Any) -> int:
        return int(a) % self.p

    def element_from_index(self, index: int) -> int:
        return index % self.p

    def pth_root(self, a: int) -> int:
        return a

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def to_json(self, a: int) -> str:
        return str(a)

    def from_json(self, value: Any) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        try:
            return int(str(value).strip()) % self.p
        except ValueError as e:
            raise FieldError(f"not an element of {self.text}: {value!r}") from e

    def render(self, a: int) -> str:
        return str(a)

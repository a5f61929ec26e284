"""Abstract interface for exact ground fields."""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from typing import Any, Iterator, Optional, Sequence, Tuple

from core.exceptions import DivisionByZeroError, FieldMismatchError, NotFiniteFieldError


class FieldDescriptor(ABC):
    """Descriptor of a field in a tower over Q or F_p.

    Descriptors own the arithmetic on raw payloads; the payload type is fixed
    per kind of field and always kept in canonical form so that equality of
    elements is equality of payloads. Concrete descriptors are frozen
    dataclasses and compare structurally.
    """

    is_prime_field: bool = False

    @property
    @abstractmethod
    def zero(self) -> Any:
        """Additive identity."""

    @property
    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """Characteristic of the field (0 for towers over Q)."""

    @property
    @abstractmethod
    def order(self) -> Optional[int]:
        """Number of elements, or None for infinite fields."""

    @property
    @abstractmethod
    def text(self) -> str:
        """Canonical descriptor text, parseable by ``field_make``."""

    @property
    @abstractmethod
    def variables(self) -> Tuple[str, ...]:
        """Names of the adjoined variables, innermost first."""

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def sub(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def neg(self, a: Any) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def inv(self, a: Any) -> Any:
        """Multiplicative inverse.

        Raises:
            DivisionByZeroError: If ``a`` is zero.
        """

    @abstractmethod
    def from_int(self, n: int) -> Any:
        """Image of an integer under the structure map Z -> K."""

    @abstractmethod
    def canonical(self, a: Any) -> Any:
        """Bring a payload of the right shape into canonical form."""

    @abstractmethod
    def to_json(self, a: Any) -> Any:
        """Serialize a payload to its JSON value."""

    @abstractmethod
    def from_json(self, value: Any) -> Any:
        """Parse a JSON value into a canonical payload."""

    @abstractmethod
    def render(self, a: Any) -> str:
        """Render a payload as an expression in the tower variables."""

    @abstractmethod
    def random_element(self, rng: random.Random) -> Any: ...

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def is_one(self, a: Any) -> bool:
        return a == self.one

    def pow(self, a: Any, n: int) -> Any:
        """Exponentiation by squaring, negative exponents through ``inv``."""
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def from_fraction(self, value: Any) -> Any:
        """Image of a rational number; the denominator must be invertible."""
        den = self.from_int(value.denominator)
        if self.is_zero(den):
            raise DivisionByZeroError(f"{value} has no image in {self.text}")
        return self.div(self.from_int(value.numerator), den)

    def element_from_index(self, index: int) -> Any:
        """Element number ``index`` of a fixed enumeration of the field."""
        raise NotFiniteFieldError(f"{self.text} has no element enumeration")

    def elements(self) -> Iterator[Any]:
        """Iterate over all elements of a finite field in index order."""
        if self.order is None:
            raise NotFiniteFieldError(f"{self.text} is infinite")
        return (self.element_from_index(i) for i in range(self.order))

    def pth_root(self, a: Any) -> Any:
        """The unique p-th root in a perfect field of characteristic p."""
        raise NotFiniteFieldError(f"p-th roots are not available in {self.text}")

    def prime_subfield(self) -> "FieldDescriptor":
        field = self
        while hasattr(field, "base"):
            field = field.base
        return field

    def __str__(self) -> str:
        return self.text


def tower_chain(field: FieldDescriptor) -> Tuple[FieldDescriptor, ...]:
    """All fields of the tower from the bottom up to ``field``."""
    chain = [field]
    while hasattr(chain[-1], "base"):
        chain.append(chain[-1].base)
    return tuple(reversed(chain))


def embed_payload(src: FieldDescriptor, dst: FieldDescriptor, value: Any) -> Any:
    """Map a payload of ``src`` into the tower ``dst`` built on top of it."""
    if src == dst:
        return value
    if not hasattr(dst, "base"):
        raise FieldMismatchError(f"{src.text} is not a subfield of {dst.text}")
    return dst.embed(embed_payload(src, dst.base, value))


def embed_sequence(src: FieldDescriptor, dst: FieldDescriptor, values: Sequence[Any]) -> Tuple[Any, ...]:
    if src == dst:
        return tuple(values)
    return tuple(embed_payload(src, dst, v) for v in values)


def restrict_payload(src: FieldDescriptor, dst: FieldDescriptor, value: Any) -> Optional[Any]:
    """Inverse of ``embed_payload``; None when ``value`` does not lie in ``dst``."""
    if src == dst:
        return value
    if not hasattr(src, "base"):
        raise FieldMismatchError(f"{dst.text} is not a subfield of {src.text}")
    inner = src.restrict(value)
    if inner is None:
        return None
    return restrict_payload(src.base, dst, inner)

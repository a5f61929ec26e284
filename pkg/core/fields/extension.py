"""Simple algebraic extensions K[u]/(m(u))."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from core.exceptions import DivisionByZeroError, FieldError, ReducibleModulusError
from core.fields.base import FieldDescriptor
from core.fields.render import render_polynomial
from core.poly.dense import dup_gcdex, dup_strip


@dataclass(frozen=True)
class ExtensionField(FieldDescriptor):
    """Quotient ``base[var]/(modulus)`` by a monic irreducible modulus.

    Payloads are tuples of exactly ``degree`` base payloads, the coefficients
    of the reduced representative in ascending order. Irreducibility is
    certified by ``core.fields.factory`` before a descriptor is built.
    """

    base: FieldDescriptor
    modulus: Tuple[Any, ...]
    var: str

    def __post_init__(self) -> None:
        if len(self.modulus) < 3:
            raise FieldError(f"extension modulus must have degree >= 2, got {len(self.modulus) - 1}")
        if not self.base.is_one(self.modulus[-1]):
            raise FieldError("extension modulus must be monic")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def zero(self) -> Tuple[Any, ...]:
        return (self.base.zero,) * self.degree

    @property
    def one(self) -> Tuple[Any, ...]:
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    @property
    def generator(self) -> Tuple[Any, ...]:
        """The residue class of ``var``."""
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.degree - 2)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def order(self) -> Optional[int]:
        q = self.base.order
        return None if q is None else q ** self.degree

    @property
    def text(self) -> str:
        return f"{self.base.text}[{self.var}]/({render_polynomial(self.base, self.modulus, self.var)})"

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.base.variables + (self.var,)

    def add(self, a, b):
        K = self.base
        return tuple(K.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        K = self.base
        return tuple(K.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        K = self.base
        n = self.degree
        if K.is_prime_field:
            p = K.p
            product = [0] * (2 * n - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        product[i + j] += x * y
            modulus = self.modulus
            for k in range(2 * n - 2, n - 1, -1):
                c = product[k] % p
                if c:
                    for i in range(n):
                        product[k - n + i] -= c * modulus[i]
            return tuple(c % p for c in product[:n])
        product = [K.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if K.is_zero(x):
                continue
            for j, y in enumerate(b):
                product[i + j] = K.add(product[i + j], K.mul(x, y))
        return self._reduce(product)

    def _reduce(self, coeffs) -> Tuple[Any, ...]:
        K = self.base
        n = self.degree
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if K.is_zero(c):
                continue
            for i in range(n):
                coeffs[k - n + i] = K.sub(coeffs[k - n + i], K.mul(c, self.modulus[i]))
            coeffs[k] = K.zero
        coeffs = coeffs[:n] + [K.zero] * (n - len(coeffs))
        return tuple(coeffs)

    def inv(self, a):
        K = self.base
        f = dup_strip(a, K)
        if not f:
            raise DivisionByZeroError(f"division by zero in {self.text}")
        s, _, h = dup_gcdex(f, list(self.modulus), K)
        if len(h) != 1:
            raise ReducibleModulusError(f"modulus of {self.text} is reducible")
        return self._reduce(s)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def canonical(self, a):
        return self._reduce(tuple(self.base.canonical(c) for c in a))

    def embed(self, c) -> Tuple[Any, ...]:
        return (c,) + (self.base.zero,) * (self.degree - 1)

    def restrict(self, a) -> Optional[Any]:
        if all(self.base.is_zero(c) for c in a[1:]):
            return a[0]
        return None

    def element_from_index(self, index: int):
        q = self.base.order
        if q is None:
            return super().element_from_index(index)
        digits = []
        for _ in range(self.degree):
            index, digit = divmod(index, q)
            digits.append(self.base.element_from_index(digit))
        return tuple(digits)

    def pth_root(self, a):
        if self.order is None:
            return super().pth_root(a)
        return self.pow(a, self.order // self.characteristic)

    def random_element(self, rng: random.Random):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def to_json(self, a):
        return [self.base.to_json(c) for c in a]

    def from_json(self, value: Any):
        if not isinstance(value, list) or len(value) > self.degree:
            raise FieldError(f"expected a coefficient list of length <= {self.degree} for {self.text}: {value!r}")
        coeffs = [self.base.from_json(v) for v in value]
        return self._reduce(coeffs)

    def render(self, a) -> str:
        return render_polynomial(self.base, dup_strip(a, self.base), self.var)

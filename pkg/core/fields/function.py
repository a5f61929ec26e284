"""Univariate rational function fields K(u)."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from core.exceptions import DivisionByZeroError, FieldError, NotFiniteFieldError
from core.fields.base import FieldDescriptor
from core.fields.render import render_polynomial
from core.poly.dense import (
    dup_add,
    dup_exquo,
    dup_gcd,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_strip,
    dup_sub,
)

_COMPACT = (",", ":")


@dataclass(frozen=True)
class FunctionField(FieldDescriptor):
    """``base(var)`` with payloads ``(numerator, denominator)``.

    Both parts are ascending coefficient tuples over ``base``; they are
    coprime and the denominator is monic. Zero is ``((), (1,))``.
    """

    base: FieldDescriptor
    var: str

    @property
    def zero(self):
        return ((), (self.base.one,))

    @property
    def one(self):
        return ((self.base.one,), (self.base.one,))

    @property
    def generator(self):
        return ((self.base.zero, self.base.one), (self.base.one,))

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def order(self) -> Optional[int]:
        return None

    @property
    def text(self) -> str:
        return f"{self.base.text}({self.var})"

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.base.variables + (self.var,)

    def _make(self, num, den):
        K = self.base
        num, den = dup_strip(num, K), dup_strip(den, K)
        if not den:
            raise DivisionByZeroError(f"division by zero in {self.text}")
        if not num:
            return self.zero
        g = dup_gcd(num, den, K)
        if len(g) > 1:
            num, den = dup_exquo(num, g, K), dup_exquo(den, g, K)
        lc = den[-1]
        if not K.is_one(lc):
            inv = K.inv(lc)
            num, den = dup_mul_ground(num, inv, K), dup_mul_ground(den, inv, K)
        return tuple(num), tuple(den)

    def add(self, a, b):
        K = self.base
        if a[1] == b[1]:
            return self._make(dup_add(a[0], b[0], K), a[1])
        return self._make(
            dup_add(dup_mul(a[0], b[1], K), dup_mul(b[0], a[1], K), K),
            dup_mul(a[1], b[1], K),
        )

    def sub(self, a, b):
        K = self.base
        if a[1] == b[1]:
            return self._make(dup_sub(a[0], b[0], K), a[1])
        return self._make(
            dup_sub(dup_mul(a[0], b[1], K), dup_mul(b[0], a[1], K), K),
            dup_mul(a[1], b[1], K),
        )

    def neg(self, a):
        return tuple(dup_neg(a[0], self.base)), a[1]

    def mul(self, a, b):
        K = self.base
        return self._make(dup_mul(a[0], b[0], K), dup_mul(a[1], b[1], K))

    def inv(self, a):
        if not a[0]:
            raise DivisionByZeroError(f"division by zero in {self.text}")
        return self._make(a[1], a[0])

    def div(self, a, b):
        if not b[0]:
            raise DivisionByZeroError(f"division by zero in {self.text}")
        K = self.base
        return self._make(dup_mul(a[0], b[1], K), dup_mul(a[1], b[0], K))

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def canonical(self, a):
        K = self.base
        num = [K.canonical(c) for c in a[0]]
        den = [K.canonical(c) for c in a[1]]
        return self._make(num, den)

    def embed(self, c):
        if self.base.is_zero(c):
            return self.zero
        return (c,), (self.base.one,)

    def restrict(self, a) -> Optional[Any]:
        num, den = a
        if len(den) == 1 and len(num) <= 1:
            return num[0] if num else self.base.zero
        return None

    def pth_root(self, a):
        p = self.characteristic
        if p == 0:
            raise NotFiniteFieldError(f"{self.text} has characteristic 0")
        K = self.base
        parts = []
        for poly in a:
            if any(not K.is_zero(c) for i, c in enumerate(poly) if i % p):
                raise NotFiniteFieldError(f"element is not a p-th power in {self.text}")
            parts.append([K.pth_root(poly[i]) for i in range(0, len(poly), p)])
        return self._make(parts[0], parts[1])

    def random_element(self, rng: random.Random):
        K = self.base
        num = [K.random_element(rng) for _ in range(rng.randint(0, 3))]
        den = [K.random_element(rng) for _ in range(rng.randint(0, 2))] + [K.one]
        return self._make(num, den)

    def to_json(self, a) -> str:
        K = self.base
        num = json.dumps([K.to_json(c) for c in a[0]], separators=_COMPACT)
        den = json.dumps([K.to_json(c) for c in a[1]], separators=_COMPACT)
        return f"{num}|{den}"

    def from_json(self, value: Any):
        if not isinstance(value, str):
            raise FieldError(f"expected a 'num|den' string for {self.text}: {value!r}")
        decoder = json.JSONDecoder()
        try:
            num, end = decoder.raw_decode(value)
            if value[end:end + 1] != "|":
                raise FieldError(f"missing '|' separator in {value!r}")
            den, end = decoder.raw_decode(value, end + 1)
        except json.JSONDecodeError as e:
            raise FieldError(f"malformed function field element {value!r}: {e}") from e
        if end != len(value) or not isinstance(num, list) or not isinstance(den, list):
            raise FieldError(f"malformed function field element {value!r}")
        K = self.base
        return self._make([K.from_json(c) for c in num], [K.from_json(c) for c in den])

    def render(self, a) -> str:
        num = render_polynomial(self.base, a[0], self.var)
        if len(a[1]) == 1:
            return num
        den = render_polynomial(self.base, a[1], self.var)
        return f"({num})/({den})"

"""Immutable univariate polynomials over a field descriptor."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence, Tuple, Union

from core.exceptions import FieldMismatchError, PolynomialError
from core.fields.base import FieldDescriptor, embed_sequence
from core.fields.element import FieldElement
from core.fields.render import render_polynomial
from core.poly import dense

NEG_INFINITY = float("-inf")

_COMPACT = (",", ":")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with ascending ``coeffs`` and no trailing zeros."""

    field: FieldDescriptor
    coeffs: Tuple[Any, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(dense.dup_strip(self.coeffs, self.field)))

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldDescriptor) -> "Polynomial":
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, field: FieldDescriptor, c: Any) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def variable(cls, field: FieldDescriptor) -> "Polynomial":
        return cls(field, (field.zero, field.one))

    @classmethod
    def monomial(cls, field: FieldDescriptor, n: int, c: Any = None) -> "Polynomial":
        c = field.one if c is None else c
        return cls(field, (field.zero,) * n + (c,))

    @classmethod
    def linear(cls, field: FieldDescriptor, root: Any) -> "Polynomial":
        """The monic polynomial ``z - root``."""
        return cls(field, (field.neg(root), field.one))

    @classmethod
    def from_ints(cls, field: FieldDescriptor, values: Sequence[int]) -> "Polynomial":
        return cls(field, tuple(field.from_int(v) for v in values))

    @property
    def degree(self) -> Union[int, float]:
        """Degree, ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Any:
        return dense.dup_lc(self.coeffs, self.field)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.field.is_one(self.coeffs[-1])

    def _check(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.text} vs {other.field.text}")

    def _wrap(self, coeffs: Sequence[Any]) -> "Polynomial":
        return Polynomial(self.field, tuple(coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._wrap(dense.dup_add(self.coeffs, other.coeffs, self.field))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._wrap(dense.dup_sub(self.coeffs, other.coeffs, self.field))

    def __neg__(self) -> "Polynomial":
        return self._wrap(dense.dup_neg(self.coeffs, self.field))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._wrap(dense.dup_mul(self.coeffs, other.coeffs, self.field))

    def __pow__(self, n: int) -> "Polynomial":
        return self._wrap(dense.dup_pow(self.coeffs, n, self.field))

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        self._check(other)
        q, r = dense.dup_divmod(self.coeffs, other.coeffs, self.field)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exquo(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self._wrap(dense.dup_exquo(self.coeffs, other.coeffs, self.field))

    def scale(self, c: Any) -> "Polynomial":
        return self._wrap(dense.dup_mul_ground(self.coeffs, c, self.field))

    def monic(self) -> "Polynomial":
        return self._wrap(dense.dup_monic(self.coeffs, self.field)[1])

    def derivative(self) -> "Polynomial":
        return self._wrap(dense.dup_diff(self.coeffs, self.field))

    def evaluate(self, a: Any) -> Any:
        return dense.dup_eval(self.coeffs, a, self.field)

    def __call__(self, a: Any) -> Any:
        return self.evaluate(a)

    def compose(self, g: "Polynomial") -> "Polynomial":
        self._check(g)
        return self._wrap(dense.dup_compose(self.coeffs, g.coeffs, self.field))

    def reverse(self, n: int) -> "Polynomial":
        """``z**n * f(1/z)``."""
        return self._wrap(dense.dup_reverse(self.coeffs, n, self.field))

    def root_multiplicity(self, a: Any) -> int:
        return dense.dup_root_multiplicity(self.coeffs, a, self.field)

    def coefficient(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def embed(self, field: FieldDescriptor) -> "Polynomial":
        """Coerce into a tower built on top of this polynomial's field."""
        return Polynomial(field, embed_sequence(self.field, field, self.coeffs))

    def elements(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coeffs)

    def to_json(self) -> list:
        return [self.field.to_json(c) for c in self.coeffs]

    @property
    def coefficient_string(self) -> str:
        return json.dumps(self.to_json(), separators=_COMPACT)

    @property
    def sort_key(self) -> Tuple[int, str]:
        return len(self.coeffs), self.coefficient_string

    def render(self, var: str = "z") -> str:
        return render_polynomial(self.field, self.coeffs, var)

    def __str__(self) -> str:
        return self.render()


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; ``poly_gcd(0, 0)`` is the zero polynomial."""
    f._check(g)
    return f._wrap(dense.dup_gcd(f.coeffs, g.coeffs, f.field))


def resultant(f: Polynomial, g: Polynomial) -> FieldElement:
    """Sylvester resultant of two nonzero polynomials.

    Raises:
        FieldMismatchError: If the polynomials live over different fields.
        PolynomialError: If either input is zero.
    """
    f._check(g)
    if f.is_zero or g.is_zero:
        raise PolynomialError("resultant of the zero polynomial")
    return FieldElement(f.field, dense.dup_resultant(f.coeffs, g.coeffs, f.field))


def lagrange_interpolate(field: FieldDescriptor, xs: Sequence[Any], ys: Sequence[Any]) -> Polynomial:
    """The polynomial of degree < len(xs) through the points (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise PolynomialError("interpolation needs as many values as nodes")
    if len(set(xs)) != len(xs):
        raise PolynomialError("interpolation nodes must be distinct")
    K = field
    result: list = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if K.is_zero(yi):
            continue
        basis: list = [K.one]
        denominator = K.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = dense.dup_mul(basis, [K.neg(xj), K.one], K)
            denominator = K.mul(denominator, K.sub(xi, xj))
        result = dense.dup_add(result, dense.dup_mul_ground(basis, K.div(yi, denominator), K), K)
    return Polynomial(field, tuple(result))

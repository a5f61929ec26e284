"""Factorization into closed points.

Over finite fields polynomials are factored completely: squarefree
decomposition, distinct-degree splitting with a Frobenius monomial base and
equal-degree splitting with a seeded pseudo-random sequence. Small fields
(at most ``ROOT_SCAN_LIMIT`` elements) first strip linear factors by an
exhaustive root scan. Over Q only rational roots are extracted; other fields
of characteristic 0 stop at the squarefree decomposition.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from sympy import Poly, Rational, Symbol, factorint

from core.exceptions import NotFiniteFieldError, PolynomialError
from core.fields.base import FieldDescriptor, restrict_payload, tower_chain
from core.fields.element import FieldElement
from core.fields.rational import RationalField
from core.logging_config import get_logger
from core.poly.dense import (
    dup_add,
    dup_exquo,
    dup_frobenius_base,
    dup_frobenius_map,
    dup_gcd,
    dup_monic,
    dup_mul,
    dup_powmod,
    dup_rem,
    dup_strip,
    dup_sub,
    dup_synthetic_div,
)
from core.poly.polynomial import Polynomial
from core.poly.sqfree import squarefree_decomposition

logger = get_logger(__name__)

ROOT_SCAN_LIMIT = 64


@dataclass(frozen=True)
class Factorization:
    """``leading * prod(factor**multiplicity)`` with monic factors."""

    leading: FieldElement
    factors: Tuple[Tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        result = Polynomial.constant(self.leading.field, self.leading.payload)
        for factor, multiplicity in self.factors:
            result = result * factor ** multiplicity
        return result


def _sorted_factors(items) -> Tuple[Tuple[Polynomial, int], ...]:
    return tuple(sorted(items, key=lambda item: (item[0].sort_key, item[1])))


def _require_finite(K: FieldDescriptor) -> None:
    if not K.is_finite:
        raise NotFiniteFieldError(f"{K.text} is not a finite field")


def _root_scan(f: List[Any], K) -> Tuple[List[List[Any]], List[Any]]:
    linear = []
    for a in K.elements():
        if len(f) <= 1:
            break
        quotient, remainder = dup_synthetic_div(f, a, K)
        if K.is_zero(remainder):
            linear.append([K.neg(a), K.one])
            f = quotient
    return linear, f


def _distinct_degree(f: List[Any], K) -> List[Tuple[List[Any], int]]:
    x = [K.zero, K.one]
    base = dup_frobenius_base(f, K)
    h = x
    rest = f
    result = []
    i = 1
    while 2 * i <= len(rest) - 1:
        h = dup_frobenius_map(h, f, base, K)
        g = dup_gcd(rest, dup_sub(h, x, K), K)
        if len(g) > 1:
            result.append((g, i))
            rest = dup_exquo(rest, g, K)
        i += 1
    if len(rest) > 1:
        result.append((rest, len(rest) - 1))
    return result


def _equal_degree(f: List[Any], n: int, K, rng: random.Random) -> List[List[Any]]:
    N = len(f) - 1
    if N <= n:
        return [f]
    q = K.order
    odd = q % 2 == 1
    base = dup_frobenius_base(f, K) if odd else None
    while True:
        r = dup_strip([K.random_element(rng) for _ in range(N)], K)
        if len(r) < 2:
            continue
        if odd:
            h = dup_rem(r, f, K)
            norm = h
            for _ in range(1, n):
                h = dup_frobenius_map(h, f, base, K)
                norm = dup_rem(dup_mul(norm, h, K), f, K)
            t = dup_powmod(norm, (q - 1) // 2, f, K)
            g = dup_gcd(f, dup_sub(t, [K.one], K), K)
        else:
            t = dup_rem(r, f, K)
            trace = t
            for _ in range((q.bit_length() - 1) * n - 1):
                t = dup_rem(dup_mul(t, t, K), f, K)
                trace = dup_add(trace, t, K)
            g = dup_gcd(f, trace, K)
        if 1 < len(g) < len(f):
            return _equal_degree(g, n, K, rng) + _equal_degree(dup_exquo(f, g, K), n, K, rng)


def _factor_squarefree(f: List[Any], K, rng: random.Random) -> List[List[Any]]:
    factors: List[List[Any]] = []
    if K.order <= ROOT_SCAN_LIMIT:
        factors, f = _root_scan(f, K)
    if len(f) > 1:
        for g, n in _distinct_degree(f, K):
            factors.extend(_equal_degree(g, n, K, rng))
    return factors


def factor_finite(f: Polynomial, seed: int = 0) -> Factorization:
    """Complete factorization over a finite field.

    Args:
        f: Nonzero polynomial over a finite field.
        seed: Seed of the equal-degree splitting sequence.

    Returns:
        Monic irreducible factors with multiplicities, sorted by degree and
        coefficient string.

    Raises:
        NotFiniteFieldError: If the field is infinite.
        PolynomialError: If ``f`` is zero.
    """
    K = f.field
    _require_finite(K)
    if f.is_zero:
        raise PolynomialError("factorization of the zero polynomial")
    rng = random.Random(seed)
    decomposition = squarefree_decomposition(f)
    items = []
    for g, multiplicity in decomposition.factors:
        for h in _factor_squarefree(list(g.coeffs), K, rng):
            items.append((Polynomial(K, tuple(h)), multiplicity))
    logger.debug(f"factored degree {f.degree} polynomial over {K.text} into {len(items)} factors")
    return Factorization(decomposition.leading, _sorted_factors(items))


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's irreducibility test over a finite field."""
    K = f.field
    _require_finite(K)
    n = len(f.coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    g = dup_monic(f.coeffs, K)[1]
    x = [K.zero, K.one]
    base = dup_frobenius_base(g, K)
    powers = {0: x}
    h = x
    for j in range(1, n + 1):
        h = dup_frobenius_map(h, g, base, K)
        powers[j] = h
    if dup_sub(powers[n], x, K):
        return False
    for r in factorint(n):
        if len(dup_gcd(g, dup_sub(powers[n // r], x, K), K)) > 1:
            return False
    return True


def irreducible_of_degree(K: FieldDescriptor, n: int) -> Polynomial:
    """First monic irreducible polynomial of degree ``n`` in index order."""
    _require_finite(K)
    if n < 1:
        raise PolynomialError("irreducible polynomials have degree >= 1")
    if n == 1:
        return Polynomial.variable(K)
    q = K.order
    for index in range(q ** n):
        digits = []
        rest = index
        for _ in range(n):
            rest, digit = divmod(rest, q)
            digits.append(K.element_from_index(digit))
        if K.is_zero(digits[0]):
            continue
        candidate = Polynomial(K, tuple(digits) + (K.one,))
        if is_irreducible(candidate):
            return candidate
    raise PolynomialError(f"no irreducible polynomial of degree {n} over {K.text}")


def rational_roots(f: Polynomial) -> Tuple[Tuple[Fraction, int], ...]:
    """Rational roots of a nonzero polynomial over Q with multiplicities, ascending."""
    if not isinstance(f.field, RationalField):
        raise PolynomialError(f"rational roots need a polynomial over Q, got {f.field.text}")
    if f.is_zero:
        raise PolynomialError("roots of the zero polynomial")
    if f.degree < 1:
        return ()
    z = Symbol("z")
    poly = Poly([Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], z, domain="QQ")
    roots = poly.ground_roots()
    return tuple(sorted((Fraction(int(r.p), int(r.q)), int(m)) for r, m in roots.items()))


def closed_point_factors(f: Polynomial, seed: int = 0) -> Tuple[Tuple[Polynomial, int], ...]:
    """Split a nonzero polynomial into monic closed-point factors with multiplicities.

    Finite fields give irreducible factors. Over Q, rational roots are split
    off the squarefree factors and the rest is kept as one squarefree factor
    per multiplicity. Other fields of characteristic 0 stop at the
    squarefree decomposition.
    """
    K = f.field
    if K.is_finite:
        return factor_finite(f, seed).factors
    if K.characteristic != 0:
        raise NotFiniteFieldError(f"closed points over {K.text} are not computable")
    items = []
    for g, multiplicity in squarefree_decomposition(f).factors:
        if isinstance(K, RationalField):
            for root, _ in rational_roots(g):
                linear = Polynomial.linear(K, root)
                items.append((linear, multiplicity))
                g = g.exquo(linear)
        if g.degree >= 1:
            items.append((g, multiplicity))
    return _sorted_factors(items)


def minimal_polynomial(x: Any, field: FieldDescriptor, over: Optional[FieldDescriptor] = None) -> Polynomial:
    """Minimal polynomial of ``x`` in a finite tower ``field`` over the subfield ``over``.

    The conjugates are the orbit of ``x`` under the Frobenius of ``over``;
    ``over`` defaults to the field directly below ``field``.
    """
    _require_finite(field)
    if over is None:
        over = getattr(field, "base", field)
    if over not in tower_chain(field):
        raise PolynomialError(f"{over.text} is not a subfield of {field.text}")
    q = over.order
    conjugates = [x]
    y = field.pow(x, q)
    while y != x:
        conjugates.append(y)
        y = field.pow(y, q)
    product: list = [field.one]
    for c in conjugates:
        product = dup_mul(product, [field.neg(c), field.one], field)
    coeffs = []
    for c in product:
        value = restrict_payload(field, over, c)
        if value is None:
            raise PolynomialError("conjugate product does not descend to the base field")
        coeffs.append(value)
    return Polynomial(over, tuple(coeffs))

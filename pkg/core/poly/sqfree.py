"""Squarefree decomposition in any characteristic."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Tuple

from core.exceptions import PolynomialError
from core.fields.element import FieldElement
from core.poly.dense import (
    dup_diff,
    dup_exquo,
    dup_gcd,
    dup_monic,
    dup_mul,
    dup_pow,
    dup_sub,
)
from core.poly.polynomial import Polynomial


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``f = leading * prod(factor**multiplicity)``.

    Factors are monic, squarefree and pairwise coprime, sorted by strictly
    increasing multiplicity. ``perfect_power`` is set when part of ``f`` lies
    in ``K[z**p]``, i.e. some multiplicity is divisible by the characteristic.
    """

    leading: FieldElement
    factors: Tuple[Tuple[Polynomial, int], ...]
    perfect_power: bool = False

    def expand(self) -> Polynomial:
        K = self.leading.field
        result: list = [self.leading.payload]
        for factor, multiplicity in self.factors:
            result = dup_mul(result, dup_pow(factor.coeffs, multiplicity, K), K)
        return Polynomial(K, tuple(result))

    def squarefree_part(self) -> Polynomial:
        K = self.leading.field
        result: list = [K.one]
        for factor, _ in self.factors:
            result = dup_mul(result, factor.coeffs, K)
        return Polynomial(K, tuple(result))


def _yun(f: List[Any], K) -> List[Tuple[List[Any], int]]:
    factors = []
    df = dup_diff(f, K)
    a = dup_gcd(f, df, K)
    b = dup_exquo(f, a, K)
    c = dup_exquo(df, a, K)
    d = dup_sub(c, dup_diff(b, K), K)
    i = 1
    while len(b) > 1:
        a = dup_gcd(b, d, K)
        if len(a) > 1:
            factors.append((a, i))
        b = dup_exquo(b, a, K)
        c = dup_exquo(d, a, K)
        d = dup_sub(c, dup_diff(b, K), K)
        i += 1
    return factors


def _sqf_positive_characteristic(f: List[Any], K) -> Tuple[List[Tuple[List[Any], int]], bool]:
    p = K.characteristic
    n, factors, inseparable = 1, [], False
    while True:
        df = dup_diff(f, K)
        finished = False
        if df:
            g = dup_gcd(f, df, K)
            h = dup_exquo(f, g, K)
            i = 1
            while len(h) > 1:
                G = dup_gcd(g, h, K)
                H = dup_exquo(h, G, K)
                if len(H) > 1:
                    factors.append((H, i * n))
                g, h, i = dup_exquo(g, G, K), G, i + 1
            if len(g) == 1:
                finished = True
            else:
                f = g
        if finished:
            break
        inseparable = True
        f = [K.pth_root(f[i]) for i in range(0, len(f), p)]
        n *= p
    return factors, inseparable


def squarefree_decomposition(f: Polynomial) -> SquarefreeDecomposition:
    """Yun's algorithm, with p-th root extraction in positive characteristic.

    Raises:
        PolynomialError: If ``f`` is zero.
        NotFiniteFieldError: If an inseparable part needs a p-th root that the
            field does not have.
    """
    if f.is_zero:
        raise PolynomialError("squarefree decomposition of the zero polynomial")
    K = f.field
    lc, monic = dup_monic(f.coeffs, K)
    leading = FieldElement(K, lc)
    if len(monic) < 2:
        return SquarefreeDecomposition(leading, ())
    if K.characteristic == 0:
        raw, inseparable = _yun(monic, K), False
    else:
        raw, inseparable = _sqf_positive_characteristic(monic, K)
    factors = tuple(sorted(((Polynomial(K, tuple(h)), m) for h, m in raw), key=lambda item: item[1]))
    return SquarefreeDecomposition(leading, factors, inseparable)


def squarefree_part(f: Polynomial) -> Polynomial:
    return squarefree_decomposition(f).squarefree_part()

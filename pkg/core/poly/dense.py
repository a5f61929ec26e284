"""Dense univariate polynomial kernels over a field descriptor.

Polynomials are lists of payloads in ascending order (index i holds the
coefficient of z**i) with no trailing zeros; the zero polynomial is ``[]``.
Every kernel takes the field descriptor ``K`` as its last argument.
Prime fields take a fast path on plain integers.
"""
from __future__ import annotations

from typing import Any, List, Sequence, Tuple

from core.exceptions import DivisionByZeroError, PolynomialError

KARATSUBA_THRESHOLD = 64

Dense = List[Any]


def dup_strip(f: Sequence[Any], K) -> Dense:
    """Remove trailing zero coefficients."""
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def dup_degree(f: Sequence[Any]) -> int:
    """Degree with -1 for the zero polynomial."""
    return len(f) - 1


def dup_lc(f: Sequence[Any], K) -> Any:
    return f[-1] if f else K.zero


def dup_add(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    if len(f) < len(g):
        f, g = g, f
    result = list(f)
    for i, c in enumerate(g):
        result[i] = K.add(result[i], c)
    return dup_strip(result, K)


def dup_sub(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    result = list(f) + [K.zero] * (len(g) - len(f))
    for i, c in enumerate(g):
        result[i] = K.sub(result[i], c)
    return dup_strip(result, K)


def dup_neg(f: Sequence[Any], K) -> Dense:
    return [K.neg(c) for c in f]


def dup_mul_ground(f: Sequence[Any], c: Any, K) -> Dense:
    if K.is_zero(c):
        return []
    return dup_strip([K.mul(a, c) for a in f], K)


def dup_add_ground(f: Sequence[Any], c: Any, K) -> Dense:
    if not f:
        return dup_strip([c], K)
    result = list(f)
    result[0] = K.add(result[0], c)
    return dup_strip(result, K)


def _mul_schoolbook(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    if K.is_prime_field:
        p = K.p
        result = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    result[i + j] += a * b
        return dup_strip([c % p for c in result], K)
    result = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            result[i + j] = K.add(result[i + j], K.mul(a, b))
    return dup_strip(result, K)


def _mul_karatsuba(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    half = max(len(f), len(g)) // 2
    f0, f1 = dup_strip(f[:half], K), list(f[half:])
    g0, g1 = dup_strip(g[:half], K), list(g[half:])
    low = dup_mul(f0, g0, K)
    high = dup_mul(f1, g1, K)
    mid = dup_sub(dup_sub(dup_mul(dup_add(f0, f1, K), dup_add(g0, g1, K), K), low, K), high, K)
    result = [K.zero] * (len(f) + len(g) - 1)
    for offset, part in ((0, low), (half, mid), (2 * half, high)):
        for i, c in enumerate(part):
            result[offset + i] = K.add(result[offset + i], c)
    return dup_strip(result, K)


def dup_mul(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    """Product; Karatsuba once both factors reach ``KARATSUBA_THRESHOLD`` terms."""
    if not f or not g:
        return []
    if min(len(f), len(g)) >= KARATSUBA_THRESHOLD:
        return _mul_karatsuba(f, g, K)
    return _mul_schoolbook(f, g, K)


def dup_sqr(f: Sequence[Any], K) -> Dense:
    return dup_mul(f, f, K)


def dup_pow(f: Sequence[Any], n: int, K) -> Dense:
    if n < 0:
        raise PolynomialError("negative exponent")
    result: Dense = [K.one]
    base = list(f)
    while n:
        if n & 1:
            result = dup_mul(result, base, K)
        n >>= 1
        if n:
            base = dup_sqr(base, K)
    return result


def dup_divmod(f: Sequence[Any], g: Sequence[Any], K) -> Tuple[Dense, Dense]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    if not g:
        raise DivisionByZeroError("polynomial division by zero")
    dg = len(g) - 1
    if len(f) < len(g):
        return [], dup_strip(f, K)
    inv_lc = K.inv(g[-1])
    remainder = list(f)
    quotient = [K.zero] * (len(f) - dg)
    if K.is_prime_field:
        p = K.p
        for k in range(len(f) - 1, dg - 1, -1):
            c = remainder[k] % p
            if not c:
                continue
            c = c * inv_lc % p
            quotient[k - dg] = c
            for i in range(dg):
                remainder[k - dg + i] -= c * g[i]
            remainder[k] = 0
        return dup_strip(quotient, K), dup_strip([c % p for c in remainder[:dg]], K)
    for k in range(len(f) - 1, dg - 1, -1):
        c = remainder[k]
        if K.is_zero(c):
            continue
        c = K.mul(c, inv_lc)
        quotient[k - dg] = c
        for i in range(dg):
            remainder[k - dg + i] = K.sub(remainder[k - dg + i], K.mul(c, g[i]))
        remainder[k] = K.zero
    return dup_strip(quotient, K), dup_strip(remainder[:dg], K)


def dup_rem(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    return dup_divmod(f, g, K)[1]


def dup_exquo(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    """Exact quotient; raises when ``g`` does not divide ``f``."""
    q, r = dup_divmod(f, g, K)
    if r:
        raise PolynomialError("inexact polynomial division")
    return q


def dup_monic(f: Sequence[Any], K) -> Tuple[Any, Dense]:
    if not f:
        return K.zero, []
    lc = f[-1]
    if K.is_one(lc):
        return lc, list(f)
    inv = K.inv(lc)
    return lc, [K.mul(c, inv) for c in f]


def dup_gcd(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    """Monic greatest common divisor (``[]`` for gcd(0, 0))."""
    f, g = dup_strip(f, K), dup_strip(g, K)
    while g:
        f, g = g, dup_rem(f, g, K)
    return dup_monic(f, K)[1]


def dup_gcdex(f: Sequence[Any], g: Sequence[Any], K) -> Tuple[Dense, Dense, Dense]:
    """Extended Euclid: ``(s, t, h)`` with ``s*f + t*g = h = gcd(f, g)`` monic."""
    r0, r1 = dup_strip(f, K), dup_strip(g, K)
    if not r0 and not r1:
        return [], [], []
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = dup_divmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, dup_sub(s0, dup_mul(q, s1, K), K)
        t0, t1 = t1, dup_sub(t0, dup_mul(q, t1, K), K)
    inv = K.inv(r0[-1])
    return dup_mul_ground(s0, inv, K), dup_mul_ground(t0, inv, K), dup_mul_ground(r0, inv, K)


def dup_diff(f: Sequence[Any], K) -> Dense:
    return dup_strip([K.mul(K.from_int(i), f[i]) for i in range(1, len(f))], K)


def dup_eval(f: Sequence[Any], a: Any, K) -> Any:
    """Horner evaluation at ``a``."""
    result = K.zero
    for c in reversed(f):
        result = K.add(K.mul(result, a), c)
    return result


def dup_compose(f: Sequence[Any], g: Sequence[Any], K) -> Dense:
    """Composition ``f(g(z))``."""
    result: Dense = []
    for c in reversed(f):
        result = dup_add_ground(dup_mul(result, g, K), c, K)
    return result


def dup_reverse(f: Sequence[Any], n: int, K) -> Dense:
    """Coefficients of ``z**n * f(1/z)`` for ``deg f <= n``."""
    padded = list(f) + [K.zero] * (n + 1 - len(f))
    return dup_strip(padded[::-1], K)


def dup_synthetic_div(f: Sequence[Any], a: Any, K) -> Tuple[Dense, Any]:
    """Divide by ``z - a``; returns quotient and the remainder ``f(a)``."""
    if not f:
        return [], K.zero
    quotient = [K.zero] * (len(f) - 1)
    carry = f[-1]
    for i in range(len(f) - 2, -1, -1):
        quotient[i] = carry
        carry = K.add(f[i], K.mul(a, carry))
    return quotient, carry


def dup_root_multiplicity(f: Sequence[Any], a: Any, K) -> int:
    """Multiplicity of ``a`` as a root of the nonzero polynomial ``f``."""
    if not f:
        raise PolynomialError("root multiplicity of the zero polynomial")
    count = 0
    while len(f) > 1:
        quotient, remainder = dup_synthetic_div(f, a, K)
        if not K.is_zero(remainder):
            break
        count += 1
        f = quotient
    return count


def dup_trailing_order(f: Sequence[Any], K) -> int:
    """Multiplicity of the root 0."""
    for i, c in enumerate(f):
        if not K.is_zero(c):
            return i
    raise PolynomialError("root multiplicity of the zero polynomial")


def dup_powmod(f: Sequence[Any], n: int, g: Sequence[Any], K) -> Dense:
    """``f**n mod g`` by repeated squaring."""
    result: Dense = dup_rem([K.one], g, K)
    base = dup_rem(f, g, K)
    while n:
        if n & 1:
            result = dup_rem(dup_mul(result, base, K), g, K)
        n >>= 1
        if n:
            base = dup_rem(dup_sqr(base, K), g, K)
    return result


def dup_resultant(f: Sequence[Any], g: Sequence[Any], K) -> Any:
    """Resultant by the Euclidean remainder sequence (Sylvester convention)."""
    f, g = dup_strip(f, K), dup_strip(g, K)
    if not f or not g:
        raise PolynomialError("resultant of the zero polynomial")
    result = K.one
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return K.mul(result, K.pow(g[-1], m))
        r = dup_rem(f, g, K)
        if not r:
            return K.zero
        if (m * n) % 2:
            result = K.neg(result)
        result = K.mul(result, K.pow(g[-1], m - (len(r) - 1)))
        f, g = g, r


def dup_frobenius_base(g: Sequence[Any], K) -> List[Dense]:
    """``z**(q*i) mod g`` for ``i < deg g`` over a finite field with q elements."""
    n = len(g) - 1
    if n <= 0:
        return []
    q = K.order
    base: List[Dense] = [[K.one]]
    if n > 1:
        step = dup_powmod([K.zero, K.one], q, g, K)
        base.append(step)
        for _ in range(2, n):
            base.append(dup_rem(dup_mul(base[-1], step, K), g, K))
    return base


def dup_frobenius_map(f: Sequence[Any], g: Sequence[Any], base: Sequence[Dense], K) -> Dense:
    """``f**q mod g`` from a Frobenius base of ``g``; coefficients are fixed by Frobenius."""
    f = dup_rem(f, g, K)
    if not f:
        return []
    result: Dense = [f[0]]
    for i in range(1, len(f)):
        if not K.is_zero(f[i]):
            result = dup_add(result, dup_mul_ground(base[i], f[i], K), K)
    return result

"""Text rendering of polynomials in tower variables."""
from __future__ import annotations

import re
from typing import Any, Sequence

_PLAIN = re.compile(r"^[0-9]+$|^[A-Za-z_][A-Za-z0-9_]*$")


def render_polynomial(K, coeffs: Sequence[Any], var: str) -> str:
    """Render ascending ``coeffs`` over ``K`` as an expression in ``var``.

    The output is accepted by the expression parser of ``core.fields.factory``.
    """
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if K.is_zero(c):
            continue
        coefficient = K.render(c)
        if not _PLAIN.match(coefficient):
            coefficient = f"({coefficient})"
        if i == 0:
            terms.append(coefficient)
            continue
        monomial = var if i == 1 else f"{var}^{i}"
        terms.append(monomial if K.is_one(c) else f"{coefficient}*{monomial}")
    return "+".join(terms) if terms else "0"

"""Building fields from text and adjoining roots."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import reduce
from typing import Any, List, Optional, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from core.exceptions import FieldError, ReducibleModulusError
from core.fields.base import FieldDescriptor, embed_payload, tower_chain
from core.fields.element import FieldElement
from core.fields.extension import ExtensionField
from core.fields.function import FunctionField
from core.fields.prime import PrimeField
from core.fields.rational import RationalField
from core.logging_config import get_logger
from core.poly.dense import dup_add, dup_mul, dup_pow, dup_strip
from core.poly.factor import is_irreducible, rational_roots
from core.poly.polynomial import Polynomial, poly_gcd

logger = get_logger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_HEAD = re.compile(r"Q|F(\d+)")
_ADJOIN = re.compile(r"\[([A-Za-z_][A-Za-z0-9_]*)\]/\(")
_FUNCTION = re.compile(r"\(([A-Za-z_][A-Za-z0-9_]*)\)")
_RESERVED = {"inf", "z"}


class _FieldRing:
    """Evaluates expressions as elements of a field."""

    def __init__(self, field: FieldDescriptor):
        self.field = field
        self._generators = {
            level.var: embed_payload(level, field, level.generator)
            for level in tower_chain(field) if hasattr(level, "var")
        }

    def number(self, value: Fraction) -> Any:
        return self.field.from_fraction(value)

    def symbol(self, name: str) -> Any:
        if name not in self._generators:
            raise FieldError(f"unknown variable {name!r} in {self.field.text}")
        return self._generators[name]

    def add(self, a: Any, b: Any) -> Any:
        return self.field.add(a, b)

    def mul(self, a: Any, b: Any) -> Any:
        return self.field.mul(a, b)

    def pow(self, a: Any, n: int) -> Any:
        return self.field.pow(a, n)


class _PolynomialRing(_FieldRing):
    """Evaluates expressions as dense polynomials in ``var`` over a field."""

    def __init__(self, field: FieldDescriptor, var: str):
        super().__init__(field)
        self.var = var

    def number(self, value: Fraction) -> List[Any]:
        return dup_strip([self.field.from_fraction(value)], self.field)

    def symbol(self, name: str) -> List[Any]:
        if name == self.var:
            return [self.field.zero, self.field.one]
        return dup_strip([super().symbol(name)], self.field)

    def add(self, a, b):
        return dup_add(a, b, self.field)

    def mul(self, a, b):
        return dup_mul(a, b, self.field)

    def pow(self, a, n: int):
        if n < 0:
            raise FieldError(f"negative power in a polynomial in {self.var}")
        return dup_pow(a, n, self.field)


def _evaluate(expr, ring: _FieldRing) -> Any:
    if expr.is_Integer:
        return ring.number(Fraction(int(expr)))
    if expr.is_Rational:
        return ring.number(Fraction(int(expr.p), int(expr.q)))
    if expr.is_Symbol:
        return ring.symbol(expr.name)
    if expr.is_Add:
        return reduce(ring.add, (_evaluate(arg, ring) for arg in expr.args))
    if expr.is_Mul:
        return reduce(ring.mul, (_evaluate(arg, ring) for arg in expr.args))
    if expr.is_Pow and expr.args[1].is_Integer:
        return ring.pow(_evaluate(expr.args[0], ring), int(expr.args[1]))
    raise FieldError(f"unsupported expression {expr}")


def _parse(text: str, names: Tuple[str, ...], ring: _FieldRing) -> Any:
    local_dict = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise FieldError(f"malformed expression {text!r}: {e}") from e
    return _evaluate(expr, ring)


def parse_polynomial(field: FieldDescriptor, text: str, var: str) -> Polynomial:
    """Parse ``text`` as a polynomial in ``var`` over ``field``."""
    ring = _PolynomialRing(field, var)
    return Polynomial(field, tuple(_parse(text, field.variables + (var,), ring)))


def parse_element(field: FieldDescriptor, text: str) -> FieldElement:
    """Parse an element from an expression in the tower variables or its JSON form."""
    text = text.strip()
    if text.startswith("[") or "|" in text:
        try:
            value = json.loads(text) if text.startswith("[") else text
        except json.JSONDecodeError as e:
            raise FieldError(f"malformed element {text!r}: {e}") from e
        return FieldElement(field, field.from_json(value))
    return FieldElement(field, _parse(text, field.variables, _FieldRing(field)))


def _check_variable(base: FieldDescriptor, var: str) -> None:
    if var in base.variables or var in _RESERVED:
        raise FieldError(f"variable name {var!r} is already used or reserved")


def make_extension(base: FieldDescriptor, modulus: Polynomial, var: str) -> ExtensionField:
    """Validated extension ``base[var]/(modulus)``.

    Over finite bases the modulus must pass the irreducibility test. Over Q
    only moduli of degree at most 3 are accepted, certified by being
    squarefree without rational roots.

    Raises:
        FieldError: If the modulus is not monic, has degree < 2 or cannot be
            certified irreducible.
        ReducibleModulusError: If the modulus is reducible.
    """
    if modulus.field != base:
        raise FieldError(f"modulus lives over {modulus.field.text}, expected {base.text}")
    _check_variable(base, var)
    if modulus.degree < 2:
        raise FieldError(f"extension modulus must have degree >= 2, got {modulus.degree}")
    if not modulus.is_monic:
        raise FieldError(f"extension modulus {modulus.render(var)} is not monic")
    if base.is_finite:
        if not is_irreducible(modulus):
            raise ReducibleModulusError(f"{modulus.render(var)} is reducible over {base.text}")
    elif isinstance(base, RationalField):
        if modulus.degree > 3:
            raise FieldError(
                f"cannot certify irreducibility of degree {modulus.degree} moduli over Q (degree <= 3 only)"
            )
        if poly_gcd(modulus, modulus.derivative()).degree > 0 or rational_roots(modulus):
            raise ReducibleModulusError(f"{modulus.render(var)} is reducible over Q")
    else:
        raise FieldError(f"irreducibility over {base.text} cannot be certified")
    return ExtensionField(base, modulus.coeffs, var)


def field_make(source: str) -> FieldDescriptor:
    """Parse a field description.

    Grammar: ``Q`` | ``F<p>`` | ``<base>[<var>]/(<monic poly in var>)`` |
    ``<base>(<var>)``; whitespace is ignored.

    Raises:
        FieldError: On malformed text, non-prime p or an invalid modulus.
    """
    text = "".join(source.split())
    head = _HEAD.match(text)
    if not head:
        raise FieldError(f"malformed field description {source!r}")
    field: FieldDescriptor = RationalField() if head.group(0) == "Q" else PrimeField(int(head.group(1)))
    pos = head.end()
    while pos < len(text):
        adjoin = _ADJOIN.match(text, pos)
        if adjoin:
            var = adjoin.group(1)
            end = _closing_paren(text, adjoin.end() - 1)
            modulus = parse_polynomial(field, text[adjoin.end():end], var)
            field = make_extension(field, modulus, var)
            pos = end + 1
            continue
        function = _FUNCTION.match(text, pos)
        if function:
            _check_variable(field, function.group(1))
            field = FunctionField(field, function.group(1))
            pos = function.end()
            continue
        raise FieldError(f"malformed field description {source!r} at position {pos}")
    logger.debug(f"parsed field {field.text}")
    return field


def _closing_paren(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise FieldError(f"unbalanced parentheses in {text!r}")


def fresh_variable(field: FieldDescriptor) -> str:
    used = set(field.variables)
    i = 1
    while f"a{i}" in used:
        i += 1
    return f"a{i}"


def adjoin_root(field: FieldDescriptor, m: Polynomial, var: Optional[str] = None) -> Tuple[ExtensionField, FieldElement]:
    """Extend ``field`` by a root of the monic irreducible ``m``.

    Returns:
        The extension and its canonical root, the residue class of the new
        variable.

    Raises:
        FieldError: For degree < 2 (use the root directly) or non-monic ``m``.
        ReducibleModulusError: If ``m`` is reducible.
    """
    if m.degree == 1:
        raise FieldError("degree-1 polynomial: its root already lies in the field")
    extension = make_extension(field, m, var or fresh_variable(field))
    logger.info(f"adjoined a root of degree {m.degree}: {extension.text}")
    return extension, FieldElement(extension, extension.generator)


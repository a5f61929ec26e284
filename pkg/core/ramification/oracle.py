"""Brute-force ramification profiles by enumerating points.

An independent check of ``ramification_profile`` over finite fields: every
point of P^1 over ``F_{q^m}`` is mapped, and its index is read directly
off the fiber polynomial. Only the different exponents use the critical
form.
"""
from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import psutil
from tqdm import tqdm

from config.manager import config_manager
from core.exceptions import FieldTooLargeError, InseparableMapError, NotFiniteFieldError, OracleError
from core.fields.base import FieldDescriptor
from core.fields.extension import ExtensionField
from core.fields.factory import fresh_variable
from core.logging_config import get_logger
from core.poly.dense import dup_trailing_order
from core.poly.factor import irreducible_of_degree, minimal_polynomial
from core.poly.polynomial import Polynomial
from core.projline.points import ProjPoint
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap, map_eval
from core.ramification.profile import RamificationEntry, RamificationProfile

logger = get_logger(__name__)


@dataclass(frozen=True)
class _Hit:
    x: Any
    e: int
    different_exponent: int
    y: ProjPoint


def _wronskian(f: RationalMap) -> Polynomial:
    P, Q = f.numerator, f.denominator
    return P.derivative() * Q - P * Q.derivative()


def _scan_chunk(f: RationalMap, W: Polynomial, start: int, stop: int) -> List[_Hit]:
    L = f.field
    P, Q = f.numerator, f.denominator
    dP, dQ = P.derivative(), Q.derivative()
    hits = []
    for index in range(start, stop):
        x = L.element_from_index(index)
        y = map_eval(f, ProjPoint(L, x))
        # A root of the fiber polynomial is multiple iff its derivative vanishes there.
        if y.is_infinity:
            slope = dQ(x)
        else:
            slope = L.sub(dP(x), L.mul(y.value, dQ(x)))
        if not L.is_zero(slope):
            continue
        e = f.fiber_polynomial(y).root_multiplicity(x)
        hits.append(_Hit(x, e, W.root_multiplicity(x), y))
    return hits


def _infinity_hit(f: RationalMap) -> Optional[_Hit]:
    L = f.field
    y = map_eval(f, ProjPoint.infinity(L))
    reversed_map = f.reversed()
    e = dup_trailing_order(reversed_map.fiber_polynomial(y).coeffs, L)
    if e < 2:
        return None
    exponent = dup_trailing_order(_wronskian(reversed_map).coeffs, L)
    return _Hit(None, e, exponent, y)


def _descend(x: Any, L: FieldDescriptor, K: FieldDescriptor) -> ClosedPoint:
    if L == K:
        return ClosedPoint.rational(K, x)
    return ClosedPoint(K, minimal_polynomial(x, L, K))


def _group(hits: List[_Hit], L: FieldDescriptor, K: FieldDescriptor) -> List[RamificationEntry]:
    orbits: Dict[ClosedPoint, List[_Hit]] = {}
    for hit in hits:
        if hit.x is None:
            continue
        orbits.setdefault(_descend(hit.x, L, K), []).append(hit)
    characteristic = K.characteristic
    entries = []
    for point, members in orbits.items():
        if len(members) != point.degree:
            raise OracleError(f"orbit of {point.render()} has {len(members)} points, expected {point.degree}")
        first = members[0]
        branch = ClosedPoint.infinity(K) if first.y.is_infinity else _descend(first.y.value, L, K)
        entries.append(
            RamificationEntry(
                point, point.degree, first.e, first.different_exponent, first.e % characteristic != 0, branch
            )
        )
    return entries


def _default_workers() -> int:
    configured = config_manager.get_value("oracle.workers", 0)
    return configured if configured and configured > 0 else psutil.cpu_count(logical=False) or 1


def brute_force_profile(
    f: RationalMap,
    extension_degree: int = 1,
    max_field_size: Optional[int] = None,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
    show_progress: Optional[bool] = None,
    progress_callback: Optional[Callable[[float, str], None]] = None,
) -> RamificationProfile:
    """Ramification profile by enumerating ``P^1(F_{q^m})``.

    Only points whose residue degree divides ``m`` are found, so the result
    matches ``ramification_profile`` once ``m`` is a multiple of every
    residue degree.

    Args:
        f: Map over a finite field.
        extension_degree: ``m``; points are enumerated over ``F_{q^m}``.
        max_field_size: Refuse larger enumerations; defaults to
            ``oracle.max_field_size``.
        workers: Thread count; defaults to ``oracle.workers`` or the number
            of physical cores.
        chunk_size: Points per work item.
        show_progress: Show a progress bar on stderr.
        progress_callback: Called with ``(fraction, message)`` per chunk.

    Raises:
        NotFiniteFieldError: If the field is infinite.
        FieldTooLargeError: If ``q**m`` exceeds the size limit.
        InseparableMapError: If the map is inseparable.
    """
    K = f.field
    if not K.is_finite:
        raise NotFiniteFieldError(f"enumeration needs a finite field, got {K.text}")
    if extension_degree < 1:
        raise OracleError(f"extension degree must be positive, got {extension_degree}")
    if max_field_size is None:
        max_field_size = config_manager.get_value("oracle.max_field_size", 1000000)
    size = K.order ** extension_degree
    if size > max_field_size:
        raise FieldTooLargeError(f"{size} points exceed the enumeration limit {max_field_size}")
    workers = workers or _default_workers()
    chunk_size = chunk_size or config_manager.get_value("oracle.chunk_size", 2048)
    if show_progress is None:
        show_progress = config_manager.get_value("oracle.show_progress", False)

    if extension_degree == 1:
        L: FieldDescriptor = K
    else:
        modulus = irreducible_of_degree(K, extension_degree)
        L = ExtensionField(K, modulus.coeffs, fresh_variable(K))
    f_L = f.embed(L)
    W = _wronskian(f_L)
    if W.is_zero:
        raise InseparableMapError(f"{f.render()} is inseparable")

    logger.info(f"enumerating {size} points of {L.text} with {workers} workers")
    bounds = [(start, min(start + chunk_size, size)) for start in range(0, size, chunk_size)]
    hits: List[_Hit] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_scan_chunk, f_L, W, start, stop) for start, stop in bounds]
        with tqdm(total=len(futures), disable=not show_progress, file=sys.stderr, desc="oracle") as bar:
            for done, future in enumerate(as_completed(futures), start=1):
                hits.extend(future.result())
                bar.update(1)
                if progress_callback:
                    progress_callback(done / len(futures), f"scanned {done}/{len(futures)} chunks")

    entries = _group(hits, L, K)
    at_infinity = _infinity_hit(f_L)
    if at_infinity is not None:
        y = at_infinity.y
        branch = ClosedPoint.infinity(K) if y.is_infinity else _descend(y.value, L, K)
        entries.append(
            RamificationEntry(
                ClosedPoint.infinity(K), 1, at_infinity.e, at_infinity.different_exponent,
                at_infinity.e % K.characteristic != 0, branch,
            )
        )
    entries.sort(key=lambda entry: entry.point.sort_key)
    logger.debug(f"oracle found {len(entries)} ramified closed points")
    return RamificationProfile(K, f.degree, tuple(entries))


def compare_profiles(computed: RamificationProfile, oracle: RamificationProfile) -> Tuple[bool, List[str]]:
    """Entry-by-entry comparison; returns the verdict and a list of differences."""
    differences = []
    if computed.degree != oracle.degree:
        differences.append(f"degree {computed.degree} vs {oracle.degree}")
    left = {entry.point: entry for entry in computed.entries}
    right = {entry.point: entry for entry in oracle.entries}
    for point in sorted(set(left) | set(right), key=lambda p: p.sort_key):
        a, b = left.get(point), right.get(point)
        if a is None or b is None:
            differences.append(f"{point.render()} only in {'oracle' if a is None else 'computed'} profile")
        elif a != b:
            differences.append(f"{point.render()}: {a} vs {b}")
    return not differences, differences

"""Triple-only covers built as compositions of cube maps.

A step composes the current cover with ``phi ∘ r`` where ``r(z) = z**3``
and the Möbius map ``phi`` sends 0 to an unramified point over the next
branch value. Each step multiplies the degree by 3 and adds exactly one
branch point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from config.manager import config_manager
from core.exceptions import (
    AdjunctionBlockedError,
    CandidateExhaustedError,
    CharacteristicError,
    ConstructionError,
    DuplicateBranchPointError,
    FieldMismatchError,
    NotFiniteFieldError,
)
from core.fields.base import FieldDescriptor
from core.fields.extension import ExtensionField
from core.fields.factory import adjoin_root
from core.fields.rational import RationalField
from core.logging_config import get_logger
from core.poly.factor import factor_finite, rational_roots
from core.poly.polynomial import Polynomial
from core.poly.sqfree import squarefree_part
from core.projline.mobius import Mobius
from core.projline.points import ProjPoint
from core.ramification.closed_point import ClosedPoint
from core.ramification.maps import RationalMap, map_compose, map_compose_all, map_eval
from core.ramification.profile import CriticalForm, RamificationProfile, critical_form, is_triple_only

logger = get_logger(__name__)

# Rational adjunctions are certified irreducible only up to this degree.
MAX_RATIONAL_ADJUNCTION = 3


def cube_map(field: FieldDescriptor) -> RationalMap:
    """``r(z) = z**3``; its only branch points are 0 and inf."""
    if field.characteristic == 3:
        raise CharacteristicError("z^3 is inseparable in characteristic 3")
    return RationalMap.power_map(field, 3)


@dataclass(frozen=True)
class ConstructionStep:
    """One composition ``h <- h ∘ phi ∘ r``.

    ``extension`` is the field adjoined before the step, if any; all other
    attributes live over ``field``.
    """

    target: ProjPoint
    preimage: ProjPoint
    phi: Mobius
    extension: Optional[ExtensionField]
    field: FieldDescriptor


@dataclass(frozen=True)
class ConstructionTrace:
    base_field: FieldDescriptor
    seed: int
    branch: Tuple[ProjPoint, ...]
    steps: Tuple[ConstructionStep, ...]

    @property
    def field(self) -> FieldDescriptor:
        return self.steps[-1].field if self.steps else self.base_field


@dataclass(frozen=True)
class Construction:
    cover: RationalMap
    trace: ConstructionTrace
    profile: RamificationProfile

    @property
    def field(self) -> FieldDescriptor:
        return self.cover.field


def _step_map(phi: Mobius) -> RationalMap:
    return map_compose(RationalMap.from_mobius(phi), cube_map(phi.field))


def _fiber_factors(fiber: Polynomial) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Split the fiber polynomial into linear factors and the rest."""
    K = fiber.field
    if fiber.degree < 1:
        return [], []
    if K.is_finite:
        factors = [m for m, _ in factor_finite(fiber).factors]
        return [m for m in factors if m.degree == 1], [m for m in factors if m.degree > 1]
    reduced = squarefree_part(fiber)
    linear = []
    if isinstance(K, RationalField):
        for root, _ in rational_roots(reduced):
            factor = Polynomial.linear(K, root)
            linear.append(factor)
            reduced = reduced.exquo(factor)
    return linear, [reduced] if reduced.degree >= 1 else []


def _choose_preimage(h: RationalMap, y: ProjPoint) -> Tuple[ProjPoint, Optional[ExtensionField]]:
    """An unramified point over ``y``, adjoining a root when none is rational.

    Rational finite points come first, then infinity, then a root of the
    smallest fiber factor.
    """
    K = h.field
    linear, rest = _fiber_factors(h.fiber_polynomial(y))
    if linear:
        first = min(linear, key=lambda m: m.coefficient_string)
        return ProjPoint(K, K.neg(first.coeffs[0])), None
    if map_eval(h, ProjPoint.infinity(K)) == y:
        return ProjPoint.infinity(K), None
    if not rest:
        raise ConstructionError(f"fiber over {y.render()} is empty")
    m = min(rest, key=lambda g: (g.degree, g.coefficient_string))
    if not K.is_finite:
        if not isinstance(K, RationalField) or m.degree > MAX_RATIONAL_ADJUNCTION:
            raise AdjunctionBlockedError(
                f"fiber over {y.render()} has no rational point and cannot be adjoined over {K.text}; "
                "use a finite field or forward mode"
            )
    L, root = adjoin_root(K, m.monic())
    return ProjPoint(L, root.payload), L


def _candidate_points(field: FieldDescriptor, seed: int, max_candidates: int) -> Iterator[ProjPoint]:
    """Infinity followed by the field elements, rotated by ``seed``."""
    if field.is_finite:
        total = field.order + 1
        for j in range(min(total, max_candidates)):
            k = (seed + j) % total
            yield ProjPoint.infinity(field) if k == 0 else ProjPoint(field, field.element_from_index(k - 1))
        return
    rationals = RationalField()
    for k in range(seed, seed + max_candidates):
        yield ProjPoint.infinity(field) if k == 0 else ProjPoint(field, field.from_fraction(rationals.element_from_index(k - 1)))


def _mobius_through(preimage: ProjPoint, alpha: ProjPoint) -> Mobius:
    """A transformation with ``phi(0) = preimage`` and ``phi(inf) = alpha``."""
    K = preimage.field
    if alpha.is_infinity:
        return Mobius.make(K, K.one, preimage.value, K.zero, K.one)
    if preimage.is_infinity:
        return Mobius.make(K, alpha.value, K.one, K.one, K.zero)
    return Mobius.make(K, alpha.value, preimage.value, K.one, K.one)


def _choose_mobius(
    h: RationalMap,
    form: CriticalForm,
    targets: Sequence[ProjPoint],
    index: int,
    preimage: ProjPoint,
    seed: int,
    max_candidates: int,
) -> Mobius:
    """``phi`` sends the other branch point of ``r`` to an admissible ``alpha``.

    ``alpha`` must be unramified for ``h`` and must not lie over another
    target, otherwise the new step would create extra branching.
    """
    others = {t for j, t in enumerate(targets) if j != index}
    for alpha in _candidate_points(h.field, seed, max_candidates):
        if alpha == preimage or form.vanishes_at(alpha):
            continue
        if map_eval(h, alpha) in others:
            continue
        return _mobius_through(preimage, alpha)
    raise CandidateExhaustedError(f"no admissible point among {max_candidates} candidates")


def _verify_step(h: RationalMap, targets: Sequence[ProjPoint], index: int) -> RamificationProfile:
    ok, profile = is_triple_only(h)
    if not ok:
        raise ConstructionError(f"step {index + 1} produced a map that is not triple-only")
    branch = set(profile.branch_values)
    for j, t in enumerate(targets):
        present = ClosedPoint.from_point(t) in branch
        if present != (j <= index):
            raise ConstructionError(f"step {index + 1}: branch point {t.render()} is {'present' if present else 'missing'}")
    return profile


def _check_branch(branch: Sequence[ProjPoint], field: FieldDescriptor) -> None:
    if field.characteristic == 3:
        raise CharacteristicError("triple-only covers need characteristic other than 3")
    if not branch:
        raise ConstructionError("at least one branch point is required")
    if not field.is_finite and field.characteristic != 0:
        raise NotFiniteFieldError(f"construction over {field.text} is not supported")
    if any(y.field != field for y in branch):
        raise FieldMismatchError(f"branch points must live over {field.text}")
    seen = set()
    for y in branch:
        if y in seen:
            raise DuplicateBranchPointError(f"branch point {y.render()} is listed twice")
        seen.add(y)


def realize_branch_points(
    branch: Sequence[ProjPoint],
    field: FieldDescriptor,
    seed: int = 0,
    max_candidates: Optional[int] = None,
) -> Construction:
    """Triple-only cover of degree ``3**k`` branched exactly over ``branch``.

    Args:
        branch: Distinct points ``y1, ..., yk`` over ``field``.
        field: Ground field, finite or of characteristic 0.
        seed: Rotates the candidate stream for the Möbius parameter.
        max_candidates: Candidate cap; defaults to
            ``construction.max_candidates``.

    Raises:
        CharacteristicError: In characteristic 3.
        DuplicateBranchPointError: If a branch point repeats.
        AdjunctionBlockedError: If a fiber needs an adjunction that cannot
            be certified.
        CandidateExhaustedError: If no admissible Möbius parameter exists.
        ConstructionError: If a step fails verification.
    """
    _check_branch(branch, field)
    if max_candidates is None:
        max_candidates = config_manager.get_value("construction.max_candidates", 10000)
    h = RationalMap.identity(field)
    targets = list(branch)
    steps: List[ConstructionStep] = []
    profile: Optional[RamificationProfile] = None
    for i in range(len(targets)):
        preimage, extension = _choose_preimage(h, targets[i])
        if extension is not None:
            h = h.embed(extension)
            targets = [t.embed(extension) for t in targets]
            logger.info(f"step {i + 1}: fiber over {targets[i].render()} needs {extension.text}")
        phi = _choose_mobius(h, critical_form(h), targets, i, preimage, seed, max_candidates)
        h = map_compose(h, _step_map(phi))
        profile = _verify_step(h, targets, i)
        steps.append(ConstructionStep(targets[i], preimage, phi, extension, h.field))
        logger.debug(f"step {i + 1}: degree {h.degree} over {h.field.text}")
    trace = ConstructionTrace(field, seed, tuple(branch), tuple(steps))
    return Construction(h, trace, profile)


def forward_compose(steps: Sequence[Mobius]) -> Tuple[RationalMap, bool, RamificationProfile]:
    """``(phi_k ∘ r) ∘ ... ∘ (phi_1 ∘ r)`` with its triple-only verdict and profile.

    Raises:
        ConstructionError: For an empty step list.
        CharacteristicError: In characteristic 3.
    """
    if not steps:
        raise ConstructionError("forward composition needs at least one Möbius map")
    field = steps[0].field
    if any(phi.field != field for phi in steps):
        raise FieldMismatchError("Möbius maps live over different fields")
    h = map_compose_all(_step_map(phi) for phi in reversed(steps))
    verdict, profile = is_triple_only(h)
    return h, verdict, profile


def replay_trace(trace: ConstructionTrace) -> RationalMap:
    """Rebuild the cover recorded in ``trace`` without any search."""
    h = RationalMap.identity(trace.base_field)
    for step in trace.steps:
        if step.extension is not None:
            h = h.embed(step.extension)
        h = map_compose(h, _step_map(step.phi))
    return h

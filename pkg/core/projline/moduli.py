"""Coordinates on the moduli space M0,n of pointed rational curves."""
from __future__ import annotations

from typing import Iterable, List, Union

from core.exceptions import BoundaryPointError
from core.fields.element import FieldElement
from core.projline.mobius import mobius_apply, mobius_from_three
from core.projline.points import PointedCurve, ProjPoint


def moduli_coordinates(curve: Union[PointedCurve, Iterable[ProjPoint]]) -> List[FieldElement]:
    """Affine values t4, ..., tn after normalizing the first three points to 0, 1, inf.

    The coordinates generate the moduli field of the pointed curve and are
    invariant under Möbius transformations. Three points give the empty list.

    Raises:
        BoundaryPointError: If the configuration lies on the boundary divisor
            of M0,n (coincident points or an image in {0, 1, inf}).
    """
    if not isinstance(curve, PointedCurve):
        curve = PointedCurve.of(curve)
    K = curve.field
    n = len(curve)
    phi = mobius_from_three(*curve.points[:3])
    coordinates = []
    for i, point in enumerate(curve.points[3:], start=4):
        image = mobius_apply(phi, point)
        if image.is_infinity or K.is_zero(image.value) or K.is_one(image.value):
            raise BoundaryPointError(f"point {i} normalizes to {image.render()}: boundary point of M0,{n}")
        coordinates.append(FieldElement(K, image.value))
    return coordinates

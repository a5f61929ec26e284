"""JSON formats for maps, profiles, construction traces and reports.

All element and polynomial encodings are the field descriptors' own
``to_json``/``from_json``; this module only arranges them into documents.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Union

from core.exceptions import FieldError, SerializationError
from core.fields.base import FieldDescriptor
from core.fields.extension import ExtensionField
from core.fields.factory import field_make, make_extension
from core.poly.polynomial import Polynomial
from core.projline.mobius import Mobius
from core.projline.points import point_from_json
from core.constructors.covering import ConstructionStep, ConstructionTrace
from core.ramification.maps import RationalMap, map_make
from core.ramification.profile import RamificationProfile

PathLike = Union[str, Path]


def polynomial_from_json(field: FieldDescriptor, data: Any) -> Polynomial:
    if not isinstance(data, list):
        raise SerializationError(f"polynomial must be a JSON array, got {type(data).__name__}")
    try:
        return Polynomial(field, tuple(field.from_json(c) for c in data))
    except (FieldError, ValueError, TypeError) as e:
        raise SerializationError(f"invalid coefficient over {field.text}: {e}") from e


def _require_keys(data: Any, keys: List[str], what: str) -> None:
    if not isinstance(data, dict):
        raise SerializationError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise SerializationError(f"{what} is missing {', '.join(missing)}")


def map_to_json(f: RationalMap) -> Dict[str, Any]:
    return {
        "field": f.field.text,
        "numerator": f.numerator.to_json(),
        "denominator": f.denominator.to_json(),
    }


def map_from_json(data: Any) -> RationalMap:
    """Parse a map document; the result is in canonical form."""
    _require_keys(data, ["field", "numerator", "denominator"], "map file")
    field = field_make(data["field"])
    return map_make(
        polynomial_from_json(field, data["numerator"]),
        polynomial_from_json(field, data["denominator"]),
    )


def profile_to_json(profile: RamificationProfile) -> Dict[str, Any]:
    return {
        "degree": profile.degree,
        "all_tame": profile.all_tame,
        "triple_only": profile.triple_only,
        "rh_consistent": profile.rh_consistent,
        "entries": [
            {
                "point": entry.point.to_json(),
                "residue_degree": entry.residue_degree,
                "e": entry.e,
                "different_exponent": entry.different_exponent,
                "tame": entry.tame,
                "branch_value": entry.branch_value.to_json(),
            }
            for entry in profile.entries
        ],
    }


def _extension_to_json(extension: ExtensionField) -> Dict[str, Any]:
    return {
        "field": extension.text,
        "modulus": Polynomial(extension.base, extension.modulus).to_json(),
        "variable": extension.var,
    }


def trace_to_json(trace: ConstructionTrace) -> Dict[str, Any]:
    return {
        "base_field": trace.base_field.text,
        "seed": trace.seed,
        "branch": [y.to_json() for y in trace.branch],
        "steps": [
            {
                "target": step.target.to_json(),
                "preimage": step.preimage.to_json(),
                "phi": step.phi.to_json(),
                "extension": None if step.extension is None else _extension_to_json(step.extension),
                "field": step.field.text,
            }
            for step in trace.steps
        ],
        "field": trace.field.text,
    }


def trace_from_json(data: Any) -> ConstructionTrace:
    """Rebuild a trace, re-validating every recorded field extension."""
    _require_keys(data, ["base_field", "seed", "branch", "steps"], "trace file")
    base = field_make(data["base_field"])
    field = base
    steps = []
    for i, item in enumerate(data["steps"], start=1):
        _require_keys(item, ["target", "preimage", "phi", "extension", "field"], f"trace step {i}")
        extension = None
        if item["extension"] is not None:
            _require_keys(item["extension"], ["modulus", "variable"], f"extension of step {i}")
            modulus = polynomial_from_json(field, item["extension"]["modulus"])
            extension = make_extension(field, modulus, item["extension"]["variable"])
            field = extension
        if field.text != item["field"]:
            raise SerializationError(f"step {i} records field {item['field']}, replay has {field.text}")
        phi_entries = item["phi"]
        if not isinstance(phi_entries, list) or len(phi_entries) != 4:
            raise SerializationError(f"step {i}: phi must list four entries")
        phi = Mobius.make(field, *(field.from_json(c) for c in phi_entries))
        steps.append(
            ConstructionStep(
                point_from_json(field, item["target"]),
                point_from_json(field, item["preimage"]),
                phi,
                extension,
                field,
            )
        )
    branch = tuple(point_from_json(base, y) for y in data["branch"])
    return ConstructionTrace(base, int(data["seed"]), branch, tuple(steps))


def dumps(document: Any, indent: int = 2) -> str:
    return json.dumps(document, indent=indent, ensure_ascii=False)


def load_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SerializationError(f"{path}: invalid JSON ({e})") from e


def save_json(document: Any, path: PathLike, indent: int = 2) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(document, indent) + "\n")


def load_map(path: PathLike) -> RationalMap:
    return map_from_json(load_json(path))


def save_map(f: RationalMap, path: PathLike, indent: int = 2) -> None:
    save_json(map_to_json(f), path, indent)


def file_digest(path: PathLike) -> str:
    """SHA-256 of a file's bytes, used as the input digest in reports."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()

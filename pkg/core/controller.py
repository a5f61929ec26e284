"""Command orchestration for the triplecover CLI.

Each command method parses its inputs, runs the library operation and
returns a ``CommandResult`` whose report has the fixed key order
command, arguments, inputs, result, verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from config.manager import config_manager
from core.constructors.belyi import belyi_reduce
from core.constructors.covering import forward_compose, realize_branch_points, replay_trace
from core.exceptions import SerializationError
from core.fields.factory import field_make, parse_element
from core.logging_config import get_logger
from core.projline.mobius import Mobius
from core.projline.moduli import moduli_coordinates
from core.projline.points import PointedCurve, parse_point
from core.ramification.maps import map_compose, push_forward
from core.ramification.oracle import brute_force_profile, compare_profiles
from core.ramification.profile import is_triple_only, ramification_marking, ramification_profile
from core.serialization import (
    file_digest,
    load_json,
    load_map,
    map_to_json,
    profile_to_json,
    save_json,
    save_map,
    trace_from_json,
    trace_to_json,
)
from core.weierstrass.family import (
    branch_divisor,
    cusp_parametrization,
    fiber_analysis,
    j_invariant,
    rh_genus,
    singular_locus,
)

logger = get_logger(__name__)


@dataclass
class CommandResult:
    command: str
    arguments: Dict[str, Any]
    inputs: Dict[str, str] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[bool] = None

    @property
    def exit_code(self) -> int:
        return 1 if self.verdict is False else 0

    def to_report(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "arguments": self.arguments,
            "inputs": self.inputs,
            "result": self.result,
            "verdict": self.verdict,
        }


def split_items(values: Sequence[str]) -> List[str]:
    """Flatten repeated options and split them on commas outside brackets."""
    items: List[str] = []
    for value in values:
        depth = 0
        current = ""
        for ch in value:
            if ch in "[(":
                depth += 1
            elif ch in "])":
                depth -= 1
            if ch == "," and depth == 0:
                items.append(current.strip())
                current = ""
            else:
                current += ch
        if current.strip():
            items.append(current.strip())
    return items


def _elements_json(values) -> List[Any]:
    return [v.to_json() for v in values]


class Controller:
    """Runs one CLI command against the library."""

    def __init__(self) -> None:
        self.construction_seed = config_manager.get_value("construction.seed", 0)
        self.factorization_seed = config_manager.get_value("factorization.seed", 0)
        self.indent = config_manager.get_value("output.indent", 2)
        logger.debug("Controller initialized")

    def _inputs(self, *paths: Path) -> Dict[str, str]:
        return {str(p): "sha256:" + file_digest(p) for p in paths}

    def verify(self, map_file: Path) -> CommandResult:
        f = load_map(map_file)
        verdict, profile = is_triple_only(f, self.factorization_seed)
        logger.info(f"verify {map_file}: degree {f.degree}, triple-only {verdict}")
        return CommandResult(
            "verify",
            {"map": str(map_file)},
            self._inputs(map_file),
            {"map": map_to_json(f), "profile": profile_to_json(profile)},
            verdict,
        )

    def construct(
        self,
        field_text: str,
        branch: Sequence[str],
        seed: Optional[int],
        map_out: Path,
        trace_out: Path,
    ) -> CommandResult:
        K = field_make(field_text)
        seed = self.construction_seed if seed is None else seed
        points = [parse_point(K, text) for text in split_items(branch)]
        construction = realize_branch_points(points, K, seed)
        h = construction.cover
        save_map(h, map_out, self.indent)
        save_json(trace_to_json(construction.trace), trace_out, self.indent)
        logger.info(f"wrote degree {h.degree} cover to {map_out} and its trace to {trace_out}")

        moduli: Dict[str, Any] = {"branch": None, "marking": None}
        if len(points) >= 4:
            moduli["branch"] = _elements_json(moduli_coordinates(PointedCurve.of(points)))
            targets = tuple(step.target.embed(h.field) for step in construction.trace.steps)
            marking = ramification_marking(h, targets, self.factorization_seed)
            moduli["marking"] = {
                "points": [None if p is None else p.to_json() for p in marking.points],
                "coordinates": None if marking.coordinates is None else _elements_json(marking.coordinates),
            }
        return CommandResult(
            "construct",
            {"field": field_text, "branch": [p.to_json() for p in points], "seed": seed,
             "map_out": str(map_out), "trace_out": str(trace_out)},
            {},
            {
                "field": h.field.text,
                "degree": h.degree,
                "map": map_to_json(h),
                "profile": profile_to_json(construction.profile),
                "trace": trace_to_json(construction.trace),
                "moduli": moduli,
            },
            True,
        )

    def belyi(self, map_file: Path, map_out: Optional[Path] = None) -> CommandResult:
        g = load_map(map_file)
        reduction = belyi_reduce(g, self.factorization_seed)
        if map_out is not None:
            save_map(reduction.cover, map_out, self.indent)
        return CommandResult(
            "belyi",
            {"map": str(map_file), "map_out": None if map_out is None else str(map_out)},
            self._inputs(map_file),
            {
                "n": reduction.exponent,
                "map": map_to_json(reduction.cover),
                "profile": profile_to_json(reduction.profile),
            },
            True,
        )

    def normalize(self, field_text: str, points: Sequence[str], map_file: Optional[Path] = None) -> CommandResult:
        K = field_make(field_text)
        curve = PointedCurve.of(parse_point(K, text) for text in split_items(points))
        result: Dict[str, Any] = {"points": curve.to_json(), "coordinates": _elements_json(moduli_coordinates(curve))}
        inputs: Dict[str, str] = {}
        if map_file is not None:
            f = load_map(map_file)
            image = push_forward(f, PointedCurve.of(p.embed(f.field) for p in curve.points))
            result["image"] = {"points": image.to_json(), "coordinates": _elements_json(moduli_coordinates(image))}
            inputs = self._inputs(map_file)
        return CommandResult(
            "normalize",
            {"field": field_text, "points": curve.to_json(), "map": None if map_file is None else str(map_file)},
            inputs,
            result,
            True,
        )

    def weierstrass(self, field_text: str, t_text: str) -> CommandResult:
        K = field_make(field_text)
        t = parse_element(K, t_text)
        locus = singular_locus(t)
        divisor = branch_divisor(t)
        genus = rh_genus(t)
        result: Dict[str, Any] = {
            "t": t.to_json(),
            "smooth": locus.smooth,
            "singular_point": locus.point_label(),
            "singularity": locus.kind,
            "branch_divisor": [{"point": p.to_json(), "multiplicity": m} for p, m in divisor],
            "fibers": [
                {
                    "point": p.to_json(),
                    "fiber": [{"x": q.label(), "residue_degree": q.residue_degree, "e": q.e} for q in fiber_analysis(t, p)],
                }
                for p, _ in divisor
            ],
            "genus": {"geometric": genus.geometric, "arithmetic": genus.arithmetic, "delta": genus.delta},
            "j": None if t.is_zero() else j_invariant(t).to_json(),
        }
        if not locus.smooth:
            check = cusp_parametrization(K)
            result["cusp_parametrization"] = {
                "satisfies_equation": check.satisfies_equation,
                "index_at_origin": check.index_at_origin,
            }
        return CommandResult("weierstrass", {"field": field_text, "t": t_text}, {}, result, None)

    def compose(self, outer_file: Path, inner_file: Path, map_out: Optional[Path] = None) -> CommandResult:
        f, g = load_map(outer_file), load_map(inner_file)
        h = map_compose(f, g)
        if map_out is not None:
            save_map(h, map_out, self.indent)
        return CommandResult(
            "compose",
            {"outer": str(outer_file), "inner": str(inner_file), "map_out": None if map_out is None else str(map_out)},
            self._inputs(outer_file, inner_file),
            {"degree": h.degree, "map": map_to_json(h)},
            None,
        )

    def oracle(self, map_file: Path, extension_degree: int) -> CommandResult:
        f = load_map(map_file)
        computed = ramification_profile(f, self.factorization_seed)
        enumerated = brute_force_profile(f, extension_degree)
        agree, differences = compare_profiles(computed, enumerated)
        if not agree:
            logger.warning(f"oracle disagreement for {map_file}: {differences}")
        return CommandResult(
            "oracle",
            {"map": str(map_file), "ext_degree": extension_degree},
            self._inputs(map_file),
            {
                "computed": profile_to_json(computed),
                "oracle": profile_to_json(enumerated),
                "differences": differences,
            },
            agree,
        )

    def forward(self, field_text: str, steps: Sequence[str], map_out: Optional[Path] = None) -> CommandResult:
        K = field_make(field_text)
        mobius_maps = []
        for text in steps:
            entries = split_items([text])
            if len(entries) != 4:
                raise SerializationError(f"a Möbius step needs four entries a,b,c,d, got {text!r}")
            mobius_maps.append(Mobius.make(K, *(parse_element(K, e).payload for e in entries)))
        h, verdict, profile = forward_compose(mobius_maps)
        if map_out is not None:
            save_map(h, map_out, self.indent)
        return CommandResult(
            "forward",
            {"field": field_text, "steps": [phi.to_json() for phi in mobius_maps],
             "map_out": None if map_out is None else str(map_out)},
            {},
            {"degree": h.degree, "map": map_to_json(h), "profile": profile_to_json(profile)},
            verdict,
        )

    def replay(self, trace_file: Path, map_file: Path) -> CommandResult:
        trace = trace_from_json(load_json(trace_file))
        h = replay_trace(trace)
        recorded = load_map(map_file)
        verdict = map_to_json(h) == map_to_json(recorded)
        return CommandResult(
            "replay",
            {"trace": str(trace_file), "map": str(map_file)},
            self._inputs(trace_file, map_file),
            {"degree": h.degree, "map": map_to_json(h), "matches_recorded": verdict},
            verdict,
        )

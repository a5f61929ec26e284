import json

import pytest
from typer.testing import CliRunner

from core.constructors.covering import forward_compose
from core.controller import split_items
from core.fields.factory import field_make
from core.poly.polynomial import Polynomial
from core.projline.mobius import Mobius
from core.ramification.maps import RationalMap, map_make
from core.ramification.profile import is_triple_only
from core.serialization import map_to_json, save_map
from main import app
from tests.conftest import rational_map

runner = CliRunner()


@pytest.fixture(autouse=True)
def _config(isolated_config):
    return isolated_config


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


def report(result):
    assert result.exit_code in (0, 1), result.output
    return json.loads(result.stdout)


@pytest.fixture
def cube_file(tmp_path, Q):
    path = tmp_path / "cube.json"
    save_map(RationalMap.power_map(Q, 3), path)
    return path


def test_split_items():
    assert split_items(["0,1", "inf", " 5 "]) == ["0", "1", "inf", "5"]
    assert split_items(['["0","1"],inf']) == ['["0","1"]', "inf"]


def test_verify_triple_only(cube_file):
    result = invoke("verify", cube_file)
    assert result.exit_code == 0
    document = report(result)
    assert list(document) == ["command", "arguments", "inputs", "result", "verdict"]
    assert document["command"] == "verify"
    assert document["verdict"] is True
    assert document["inputs"][str(cube_file)].startswith("sha256:")
    assert [entry["e"] for entry in document["result"]["profile"]["entries"]] == [3, 3]


def test_verify_negative_verdict_exits_one(tmp_path, Q):
    path = tmp_path / "cubic.json"
    save_map(rational_map(Q, (0, -3, 0, 1)), path)
    result = invoke("verify", path)
    assert result.exit_code == 1
    assert report(result)["verdict"] is False


def test_construct_writes_map_and_trace(tmp_path):
    map_out, trace_out = tmp_path / "cover.json", tmp_path / "cover.trace.json"
    result = invoke("construct", "--field", "F5", "--branch", "0", "--map-out", map_out, "--trace-out", trace_out)
    assert result.exit_code == 0
    document = report(result)
    assert document["result"]["map"] == {"field": "F5", "numerator": ["0", "0", "0", "1"], "denominator": ["1"]}
    assert json.loads(map_out.read_text(encoding="utf-8")) == document["result"]["map"]
    assert json.loads(trace_out.read_text(encoding="utf-8"))["base_field"] == "F5"
    assert document["result"]["moduli"] == {"branch": None, "marking": None}

    replay = invoke("replay", trace_out, map_out)
    assert replay.exit_code == 0
    assert report(replay)["result"]["matches_recorded"] is True


def test_construct_errors_exit_two(tmp_path):
    result = invoke("construct", "--field", "F3", "--branch", "0", "--map-out", tmp_path / "m.json")
    assert result.exit_code == 2
    assert "error:" in result.output
    result = invoke("construct", "--field", "F7", "--branch", "0,0", "--map-out", tmp_path / "m.json")
    assert result.exit_code == 2


def test_normalize(tmp_path, cube_file):
    document = report(invoke("normalize", "--points", "0,1,inf,5"))
    assert document["result"]["coordinates"] == ["5"]
    document = report(invoke("normalize", "--points", "2,5,1,3"))
    assert document["result"]["coordinates"] == ["2/3"]
    document = report(invoke("normalize", "--points", "0,1,inf,2", "--map", cube_file))
    assert document["result"]["image"] == {"points": ["0", "1", "inf", "8"], "coordinates": ["8"]}


def test_normalize_boundary_point_exits_one():
    result = invoke("normalize", "--points", "0,1,inf,1")
    assert result.exit_code == 1
    assert "boundary" in result.output


def test_weierstrass_smooth_and_cuspidal():
    document = report(invoke("weierstrass", "--field", "Q", "--t", "1"))
    assert document["verdict"] is None
    result = document["result"]
    assert result["smooth"] is True
    assert result["j"] == "0"
    assert result["genus"] == {"geometric": 1, "arithmetic": 1, "delta": 0}
    assert [item["point"] for item in result["branch_divisor"]] == ["0", "1", "inf"]

    result = report(invoke("weierstrass", "--field", "Q", "--t", "0"))["result"]
    assert result["singular_point"] == "[0,0,1]"
    assert result["singularity"] == "cusp"
    assert result["j"] is None
    assert result["cusp_parametrization"] == {"satisfies_equation": True, "index_at_origin": 3}


def test_weierstrass_in_characteristic_two():
    result = report(invoke("weierstrass", "--field", "F2", "--t", "1"))["result"]
    assert result["smooth"] is True


def test_compose_and_output_file(tmp_path, cube_file):
    output = tmp_path / "report.json"
    result = invoke("compose", cube_file, cube_file, "--map-out", tmp_path / "nine.json", "--output", output)
    assert result.exit_code == 0
    document = json.loads(output.read_text(encoding="utf-8"))
    assert document["result"]["degree"] == 9
    assert (tmp_path / "nine.json").exists()


def test_oracle_agrees(tmp_path):
    F4 = field_make("F2[w]/(w^2+w+1)")
    omega = F4.from_json(["0", "1"])
    path = tmp_path / "g.json"
    save_map(map_make(Polynomial(F4, (omega, F4.zero, F4.zero, F4.one)), Polynomial.one(F4)), path)
    document = report(invoke("oracle", path, "--ext-degree", 3))
    assert document["verdict"] is True
    assert document["result"]["differences"] == []

    belyi = report(invoke("belyi", path, "--map-out", tmp_path / "h.json"))
    assert belyi["result"]["n"] == 2
    assert (tmp_path / "h.json").exists()


def test_forward():
    document = report(invoke("forward", "--field", "Q", "--step=-1,1,1,1", "--step=1,0,0,1"))
    assert document["verdict"] is True
    assert document["result"]["degree"] == 9

    result = invoke("forward", "--field", "Q", "--step=1,0,0,1", "--step=1,0,0,1")
    assert result.exit_code == 1


def test_forward_rejects_short_steps():
    result = invoke("forward", "--field", "Q", "--step", "1,0,0")
    assert result.exit_code == 2


def test_missing_map_file_exits_two(tmp_path):
    result = invoke("verify", tmp_path / "absent.json")
    assert result.exit_code == 2


def test_reruns_are_byte_identical(tmp_path):
    outputs = []
    for run in ("a", "b"):
        map_out, trace_out = tmp_path / f"{run}.json", tmp_path / f"{run}.trace.json"
        result = invoke("construct", "--field", "F7", "--branch", "0,1", "--seed", 2,
                        "--map-out", map_out, "--trace-out", trace_out)
        assert result.exit_code == 0
        outputs.append((map_out.read_bytes(), trace_out.read_bytes()))
    assert outputs[0] == outputs[1]


def test_cube_over_f5_is_triple_only(tmp_path, F5):
    path = tmp_path / "cube5.json"
    save_map(RationalMap.power_map(F5, 3), path)
    result = invoke("verify", path)
    assert result.exit_code == 0
    document = report(result)
    assert document["verdict"] is True
    profile = document["result"]["profile"]
    assert [(entry["point"], entry["e"], entry["branch_value"]) for entry in profile["entries"]] == [
        (["0", "1"], 3, ["0", "1"]),
        ("inf", 3, "inf"),
    ]
    assert profile["triple_only"] and profile["all_tame"] and profile["rh_consistent"]


def test_inseparable_map_exits_two(tmp_path, F2):
    path = tmp_path / "square.json"
    save_map(RationalMap.power_map(F2, 2), path)
    result = invoke("verify", path)
    assert result.exit_code == 2
    assert "error:" in result.output
    assert "inseparable" in result.output


def test_belyi_on_wild_map_exits_two(tmp_path, F2):
    path = tmp_path / "wild.json"
    save_map(rational_map(F2, (0, 1, 1)), path)
    result = invoke("belyi", path)
    assert result.exit_code == 2
    assert "error:" in result.output


def test_blocked_rational_adjunction_exits_two(tmp_path):
    result = invoke("construct", "--field", "Q", "--branch", "0,1,2",
                    "--map-out", tmp_path / "m.json", "--trace-out", tmp_path / "t.json")
    assert result.exit_code == 2
    assert "error:" in result.output
    assert "cannot be adjoined" in result.output
    assert not (tmp_path / "m.json").exists()


def test_forward_verdict_matches_library(Q):
    steps = [Mobius.from_ints(Q, -1, 1, 1, 1), Mobius.identity(Q)]
    h, verdict, _ = forward_compose(steps)
    document = report(invoke("forward", "--field", "Q", "--step=-1,1,1,1", "--step=1,0,0,1"))
    assert verdict is True
    assert document["verdict"] == verdict == is_triple_only(h)[0]
    assert document["result"]["map"] == map_to_json(h)

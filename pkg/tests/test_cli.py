from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from imagcone import cli
from imagcone.exactfield import vec
from imagcone.jsonio import vec_from_json
from imagcone.polycone import PolyCone
from imagcone.rootsys import AlgorithmInvariantViolated

DIHEDRAL = {"gram": [[1, "-5/4"], ["-5/4", 1]], "names": ["alpha", "beta"]}
UNIVERSAL = {"coxeter_labels": [[1, "inf", "inf"], ["inf", 1, "inf"], ["inf", "inf", 1]]}
H3 = {"coxeter_labels": [[1, 5, 2], [5, 1, 3], [2, 3, 1]]}


@pytest.fixture
def spec(tmp_path):
    def write(data, name="sys.json"):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)

    return write


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    text = out.getvalue()
    return code, (json.loads(text) if text.startswith("{") else text), err.getvalue()


def test_validate_round_trip(spec):
    code, data, _ = call("validate", "--system", spec(H3))
    assert code == 0 and data["rank"] == 3
    again = cli.system_from_json({k: data[k] for k in ("field", "form", "simples")})
    original = cli.system_from_json(H3)
    assert again.gram == original.gram
    assert again.field == original.field


def test_kcone_round_trip(spec):
    code, data, _ = call("kcone", "--system", spec(UNIVERSAL))
    assert code == 0
    cone = PolyCone.from_json(data)
    code2, data2, _ = call("kcone", "--via-facials", "--system", spec(UNIVERSAL))
    assert PolyCone.from_json(data2) == cone
    assert len(cone.generators) == 3


def test_roots_and_type(spec):
    code, data, _ = call("roots", "--height", "100", "--system", spec(H3))
    assert code == 0 and data["count"] == 15
    code, data, _ = call("type", "--system", spec(UNIVERSAL))
    assert [c["type"] for c in data["components"]] == ["indefinite"]


def test_zmember_statuses_and_exit_codes(spec):
    path = spec(DIHEDRAL)
    code, data, _ = call("zmember", "--vector", '["9/4","9/4"]', "--system", path)
    assert code == 0 and data["status"] == "in_z" and data["word"] == []
    code, data, _ = call("zmember", "--vector", "1,0", "--system", path)
    assert code == 0 and data["certificate"] == "positive_norm"
    code, data, _ = call("zmember", "--vector", "2,1", "--budget", "50", "--system", path)
    assert code == 3 and data["status"] == "inconclusive"


def test_budget_from_environment(spec, monkeypatch):
    monkeypatch.setenv("IMAGCONE_BUDGET", "7")
    code, data, _ = call("zmember", "--vector", "2,1", "--system", spec(DIHEDRAL))
    assert code == 3 and data["steps"] == 7


def test_input_errors_exit_two(spec):
    bad = spec({"gram": [[1, "-1/3"], ["-1/3", 1]]}, "bad.json")
    code, _, err = call("validate", "--system", bad)
    assert code == 2 and "InvalidGram" in err
    code, _, _ = call("zmember", "--vector", "1,2,3,4", "--system", spec(DIHEDRAL))
    assert code == 2
    code, _, _ = call("validate", "--system", spec({"gram": [[1]], "coxeter_labels": [[1]]}, "two.json"))
    assert code == 2
    code, _, _ = call("nonsense")
    assert code == 2
    code, _, _ = call("universal-locate", "--vector", "1,1,1", "--system", spec(UNIVERSAL))
    assert code == 2


def test_internal_errors_exit_four(spec, monkeypatch):
    def boom(*a, **k):
        raise AlgorithmInvariantViolated("forced")

    monkeypatch.setattr(cli.zc, "z_membership", boom)
    code, _, err = call("zmember", "--vector", "1,1", "--system", spec(DIHEDRAL))
    assert code == 4 and "internal" in err


def test_float_flag_adds_decimals(spec):
    code, data, _ = call("zmember", "--vector", "9/4,9/4", "--float", "--system", spec(DIHEDRAL))
    assert data["k"] == ["9/4", "9/4"]
    assert data["k_float"] == [2.25, 2.25]


def test_limit_rays_modes(spec):
    path = spec(DIHEDRAL)
    code, data, _ = call("limit-rays", "--mode", "exact", "--height", "40", "--system", path)
    assert code == 0 and data["exact"]
    assert {tuple(vec_from_json(r)) for r in data["rays"]} == {vec([2, 1]), vec([1, 2])}
    code, data, _ = call("limit-rays", "--mode", "numeric", "--height", "200", "--system", path)
    assert code == 0 and len(data["approx"]) == 2
    code, text, _ = call("limit-rays", "--csv", "--height", "10", "--system", path)
    lines = text.strip().splitlines()
    assert len(lines) > 2 and all(len(l.split(",")) == 4 for l in lines)


def test_universal_subcommands(spec):
    path = spec(DIHEDRAL)
    code, data, _ = call("universal-locate", "--vector", "2,1", "--system", path)
    assert data == {"status": "in_d", "alpha": 0}
    code, data, _ = call("universal-itinerary", "--vector", "2,1", "--steps", "4", "--system", path)
    assert data["prefix"] == [0, 1, 0, 1] and not data["terminated"]
    code, data, _ = call("dominance", "--a", "1,0", "--b", "5/2,1", "--system", path)
    assert data["dominates"] is True


def test_facial_and_lattice_subcommands(spec):
    path = spec(UNIVERSAL)
    code, data, _ = call("facial-subsets", "--system", path)
    assert data["count"] == 8
    code, data, _ = call("zface-lattice", "--system", path)
    assert code == 0 and len(data["nodes"]) == 5
    code, data, _ = call("facial-closure", "--generators", "[[0,0,1],[6,2,1]]", "--system", path)
    assert data["status"] == "ok" and data["indices"] == [0, 1, 2]
    code, data, _ = call("zface", "--vector", "1,1,0", "--system", path)
    assert data["indices"] == [0, 1]


def test_output_is_deterministic(spec):
    path = spec(UNIVERSAL)
    runs = [call("facial-subsets", "--system", path)[1] for _ in range(2)]
    assert json.dumps(runs[0]) == json.dumps(runs[1])


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "imagcone", "type", "--system", "-"],
        input=json.dumps(DIHEDRAL), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["components"][0]["type"] == "indefinite"

import json
import subprocess
import sys
from pathlib import Path

import pytest

from friezegrowth.arith import LaurentPolynomial
from friezegrowth.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, render_frieze, run
from friezegrowth.frieze import Frieze
from friezegrowth.schema import parse_cluster_problem, parse_frieze_descriptor

from f4_data import MOUTH_VARIABLES, X_DELTA

F4 = str(Path(__file__).resolve().parent.parent / "data" / "f4.json")


def test_frieze_right_golden():
    status, out = run(["frieze", "--quiddity", "3,5,9", "--rows", "6"])
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split() == ["3", "5", "9"]
    assert lines[2].split() == ["121", "123", "127"]
    assert lines[5].split() == ["14985", "14277", "14513"]
    assert "s_1 = 118" in lines


def test_frieze_default_rows():
    status, out = run(["frieze", "--quiddity", "6,20"])
    assert status == EXIT_OK
    rows = [l.split() for l in out.splitlines() if not l.startswith("s_")]
    assert len(rows) == 6
    assert rows[2] == ["2360", "708"]
    assert "s_3 = 1642678" in out


def test_frieze_json_roundtrip():
    status, out = run(["frieze", "--quiddity", "3,5,9", "--format", "json"])
    assert status == EXIT_OK
    doc = json.loads(out)
    assert doc["rows"][1] == ["14", "44", "26"]
    assert doc["growth"]["1"] == "118"
    desc = parse_frieze_descriptor(doc)
    assert desc.quiddity == [3, 5, 9] and desc.depth == 6


def test_frieze_laurent_input():
    doc = json.dumps({"ring": "laurent", "vars": 2, "quiddity": ["x1", "x2"], "depth": 4})
    status, out = run(["frieze", "--input", doc])
    assert status == EXIT_OK
    assert "s_1 = x1*x2 - 2" in out
    status, out = run(["frieze", "--input", doc, "--format", "json"])
    parsed = json.loads(out)
    assert parsed["ring"] == "laurent"
    g = LaurentPolynomial.from_json(parsed["growth"]["2"])
    x1, x2 = LaurentPolynomial.variables(2)
    assert g == (x1 * x2 - 2) ** 2 - 2


def test_frieze_declared_period():
    status, out = run(["frieze", "--quiddity", "5,5,5", "--rows", "3"])
    assert "s_1 = 5" in out
    status, out = run(["frieze", "--quiddity", "5,5,5", "--rows", "3", "--declared-period"])
    assert "s_1 = 110" in out


@pytest.mark.parametrize("argv", [
    ["frieze", "--quiddity", "3,x,9"],
    ["frieze"],
    ["frieze", "--quiddity", "3,5", "--rows", "0"],
    ["frieze", "--input", "{\"ring\": \"int\", \"quiddity\": [1,"],
    ["frieze", "--input", "{\"ring\": \"mod7\", \"quiddity\": [1]}"],
    ["frieze", "--input", "/nonexistent/file.json"],
    ["frobnicate"],
    ["universal"],
    ["universal", "--rank", "0"],
])
def test_malformed_input_exit_two(argv):
    status, out = run(argv)
    assert status == EXIT_INPUT
    assert out


def test_json_error_has_position():
    status, out = run(["frieze", "--input", "{\"ring\": \"int\",\n \"quiddity\": [1,}"])
    assert status == EXIT_INPUT
    assert "line 2" in out and "column" in out


def test_degenerate_frieze_exit_one():
    status, out = run(["frieze", "--quiddity", "1,1,1"])
    assert status == EXIT_FAIL
    assert "frieze error" in out


def test_negative_entries_are_reported():
    status, out = run(["frieze", "--quiddity", "1,2", "--rows", "4"])
    assert status == EXIT_FAIL
    assert "not an integer frieze" in out


def test_universal_growth():
    status, out = run(["universal", "--rank", "3", "--growth", "1"])
    assert (status, out) == (EXIT_OK, "z_1*z_2*z_3 - z_1 - z_2 - z_3")
    status, out = run(["universal", "--rank", "2", "--growth", "1", "--format", "json"])
    assert json.loads(out)["text"] == "z_1*z_2 - 2"


def test_universal_rows():
    status, out = run(["universal", "--rank", "2", "--rows", "3"])
    assert status == EXIT_OK
    assert "z_1*z_2 - 1" in out and "s_1 = z_1*z_2 - 2" in out


def test_cluster_search_f4():
    status, out = run(["cluster-search", "--input", F4, "--format", "json"])
    assert status == EXIT_OK
    doc = json.loads(out)
    assert not doc["missing"]
    found = {tuple(e["d"]): LaurentPolynomial.from_json(e["variable"]) for e in doc["found"]}
    assert found == MOUTH_VARIABLES


def test_cluster_search_too_shallow():
    status, out = run(["cluster-search", "--input", F4, "--depth", "3"])
    assert status == EXIT_FAIL
    assert "missing: (1, 2, 1, 1, 1)" in out


def test_tube_check_f4():
    status, out = run(["tube-check", "--input", F4])
    assert status == EXIT_OK
    assert out.splitlines()[-1] == "verdict: all tubes share X_delta"
    assert "X(0, 1, 1, 0, 0) = (x1*x2^2 + x1*x4 + x3*x4)/(x2*x3)" in out


def test_tube_check_json_and_specialization():
    status, out = run(["tube-check", "--input", F4, "--specialize", "1,1,1,1,1", "--format", "json"])
    assert status == EXIT_OK
    doc = json.loads(out)
    assert LaurentPolynomial.from_json(doc["x_delta"]) == X_DELTA
    spec = doc["specialization"]
    assert spec["ok"] and spec["x_delta"] == "118"
    assert spec["quiddities"] == [["6", "20"], ["5", "3", "9"]]
    # the emitted document is itself a valid cluster problem
    problem = parse_cluster_problem(doc)
    assert [len(t.mouth) for t in problem.tubes] == [2, 3]
    assert problem.tubes[0].variables == [MOUTH_VARIABLES[(0, 2, 1, 1, 0)], MOUTH_VARIABLES[(2, 2, 2, 1, 1)]]


def test_tube_check_with_supplied_variables(tmp_path):
    doc = json.loads(Path(F4).read_text())
    for tube in doc["tubes"]:
        tube["variables"] = [MOUTH_VARIABLES[tuple(b)].to_json() for b in tube["mouth"]]
    path = tmp_path / "f4_vars.json"
    path.write_text(json.dumps(doc))
    status, out = run(["tube-check", "--input", str(path), "--depth", "0"])
    assert status == EXIT_OK, out


def test_tube_check_invalid_tube(tmp_path):
    doc = json.loads(Path(F4).read_text())
    doc["tubes"][1]["delta"] = [2, 4, 3, 2, 2]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    status, out = run(["tube-check", "--input", str(path)])
    assert status == EXIT_FAIL
    assert "tube 2" in out


def test_tube_check_zero_specialization():
    status, out = run(["tube-check", "--input", F4, "--specialize", "1,0,1,1,1"])
    assert status == EXIT_FAIL
    assert "specialization error" in out


def test_tube_check_bad_point():
    status, _ = run(["tube-check", "--input", F4, "--specialize", "1,1"])
    assert status == EXIT_INPUT


def test_cluster_problem_errors_name_the_path():
    status, out = run(["cluster-search", "--input", '{"B": [[0, 1], [-1, "a"]], "targets": [[1, 0]]}'])
    assert status == EXIT_INPUT
    assert "B[1][1]" in out


def test_verify():
    status, out = run(["verify", "--input", F4])
    assert status == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 8 and all(l.startswith("PASS") for l in lines)


def test_outputs_are_deterministic():
    for argv in (["cluster-search", "--input", F4, "--format", "json"], ["tube-check", "--input", F4]):
        assert run(argv) == run(argv)


def test_render_frieze_modes():
    rows = Frieze((6, 20)).rows(3)
    text = render_frieze(rows)
    assert [l.split() for l in text.splitlines()] == [["6", "20"], ["119", "119"], ["2360", "708"]]
    assert json.loads(render_frieze(rows, "json"))["rows"][2] == ["708", "2360"]
    x1, x2 = LaurentPolynomial.variables(2)
    sym = render_frieze(Frieze((x1, x2)).rows(2), names=["a", "b"])
    assert sym.splitlines()[1].split() == ["a*b", "-", "1", "a*b", "-", "1"]


def test_main_prints(capsys):
    assert main(["universal", "--rank", "1", "--growth", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "z_1^2 - 2"
    assert main(["frieze", "--quiddity", "a"]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "friezegrowth.cli", "frieze", "--quiddity", "6,20", "--rows", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "s_1 = 118" in proc.stdout

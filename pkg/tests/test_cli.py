import io
import json
import sys

import pytest

from horoindex.cli import main

BEZOUT_PROBLEM = {
    "group": {"gl": [3], "torus": 0},
    "face": {"blocks": [[1, 2]]},
    "lambda_H": {"offset": [0, 0], "basis": [[1, 0]]},
    "mode": "general",
    "supports": [
        [[0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [2, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [2, 0, 0], [3, 0, 0]],
    ],
}


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_index_bezout(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    code, out, err = run_cli(["index", path], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["index"] == "6"
    assert payload["routes"]["integral"] == "6"
    assert payload["routes"]["lift"] == "6"
    assert payload["routes"]["hilbert"] is None


def test_index_output_is_parallel_independent(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    _, out1, _ = run_cli(["index", path, "--parallel", "1"], capsys)
    _, out2, _ = run_cli(["index", path, "--parallel", "3"], capsys)
    assert out1 == out2


def test_index_deterministic_across_runs(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    _, out1, _ = run_cli(["index", path], capsys)
    _, out2, _ = run_cli(["index", path], capsys)
    assert out1 == out2


def test_moment(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    code, out, _ = run_cli(["moment", path], capsys)
    assert code == 0
    polys = json.loads(out)["polytopes"]
    assert len(polys) == 3
    assert polys[0]["vertices"] == [["0", "0"], ["1", "0"]]


def test_newton(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    code, out, _ = run_cli(["newton", path], capsys)
    assert code == 0
    polys = json.loads(out)["polytopes"]
    assert len(polys) == 3
    # lifts live in face coords (2) + free pattern entries (2)
    assert all(len(v) == 4 for v in polys[0]["vertices"])


def test_completion(tmp_path, capsys):
    problem = dict(BEZOUT_PROBLEM)
    problem["supports"] = [[[0, 0, 0], [3, 0, 0]]]
    path = write(tmp_path, "problem.json", problem)
    code, out, _ = run_cli(["completion", path], capsys)
    assert code == 0
    supports = json.loads(out)["supports"]
    assert supports[0] == [["0", "0", "0"], ["1", "0", "0"],
                           ["2", "0", "0"], ["3", "0", "0"]]


def test_weyl(capsys):
    code, out, _ = run_cli(["weyl", "--gl", "3", "--weight", "2,1,0",
                            "--blocks", "1,2"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 8
    assert payload["degree"] == 2


def test_gc_count(capsys):
    code, out, _ = run_cli(["gc", "--n", "3", "--weight", "2,1,0", "--count"], capsys)
    assert code == 0
    assert out.strip() == "8"


def test_gc_polytope(capsys):
    code, out, _ = run_cli(["gc", "--n", "2", "--weight", "3,1"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"] == [["1"], ["3"]]
    assert payload["volume"] == "2"


def test_mixed_volume(tmp_path, capsys):
    tri = {"vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
    path = write(tmp_path, "bodies.json", {"bodies": [tri, tri]})
    code, out, _ = run_cli(["mixed-volume", path], capsys)
    assert code == 0
    assert json.loads(out) == "1/2"


def test_mixed_integral(tmp_path, capsys):
    tri = {"vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
    obj = {"polynomial": {"terms": [{"exp": [1, 0], "coef": "1"}]},
           "bodies": [tri, tri, tri]}
    path = write(tmp_path, "bodies.json", obj)
    code, out, _ = run_cli(["mixed-integral", path], capsys)
    assert code == 0
    assert json.loads(out) == "1/6"


def test_hilbert(tmp_path, capsys):
    problem = {
        "group": {"gl": [2]},
        "mode": "quotient_by_commutator",
        "supports": [[[0, 0], [1, 0], [1, 1]]],
    }
    path = write(tmp_path, "problem.json", problem)
    code, out, _ = run_cli(["hilbert", path, "--k", "2"], capsys)
    assert code == 0
    assert json.loads(out)["values"] == {"0": 1, "1": 4, "2": 10}


def test_verify_quick(capsys):
    code, out, _ = run_cli(["verify", "--quick"], capsys)
    assert code == 0
    assert "all checks passed" in out


def test_exit_code_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run_cli(["index", str(path)], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "parse"


def test_exit_code_missing_file(capsys):
    code, _, err = run_cli(["index", "no_such_file.json"], capsys)
    assert code == 2


def test_exit_code_semantic_error(tmp_path, capsys):
    problem = dict(BEZOUT_PROBLEM)
    problem["supports"] = problem["supports"][:2]  # wrong support count
    path = write(tmp_path, "problem.json", problem)
    code, _, err = run_cli(["index", path], capsys)
    assert code == 3
    assert json.loads(err)["error"] == "validation"


def test_output_file(tmp_path, capsys):
    path = write(tmp_path, "problem.json", BEZOUT_PROBLEM)
    out_path = tmp_path / "result.json"
    code, out, _ = run_cli(["index", path, "-o", str(out_path)], capsys)
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text())["index"] == "6"

import json
import subprocess
import sys

import pytest

from stable_kneser.cli import main, read_cycle


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "stable_kneser", *args],
        input=stdin, capture_output=True, text=True,
    )


def test_cycle_not_hamiltonian():
    res = run_cli("cycle", "--n", "6", "--k", "3", "--s", "2")
    assert res.returncode == 1
    assert "n >= 2k+1" in res.stderr


def test_classes_jsonl_table_orders():
    res = run_cli("classes", "--n", "36", "--k", "6", "--s", "3", "--format", "jsonl")
    assert res.returncode == 0
    rows = [json.loads(line) for line in res.stdout.splitlines()]
    orders = {r["order"] for r in rows}
    assert orders == {36, 18, 12, 6}
    assert {"necklace": [2, 2, 11, 2, 2, 11], "order": 18, "base": [1, 4, 7, 19, 22, 25]} in rows


@pytest.mark.parametrize("fmt", ["text", "jsonl"])
def test_cycle_pipe_verify(fmt):
    cyc = run_cli("cycle", "--n", "9", "--k", "3", "--s", "2", "--format", fmt)
    assert cyc.returncode == 0 and len(cyc.stdout.splitlines()) == 30
    ver = run_cli("verify", "--n", "9", "--k", "3", "--s", "2", stdin=cyc.stdout)
    assert ver.returncode == 0, ver.stdout


def test_verify_rejects_corruption(tmp_path):
    path = tmp_path / "c.txt"
    assert main(["cycle", "--n", "9", "--k", "3", "--s", "2", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    assert main(["verify", "--n", "9", "--k", "3", "--s", "2", "--in", str(path)]) == 1


def test_verify_json_report(tmp_path, capsys):
    path = tmp_path / "c.jsonl"
    main(["cycle", "--n", "8", "--k", "3", "--s", "2", "--format", "jsonl", "--out", str(path)])
    capsys.readouterr()
    assert main(["verify", "--n", "8", "--k", "3", "--s", "2", "--in", str(path), "--format", "jsonl"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ok"] and rep["vertex_count"] == 16


def test_invalid_params_exit_2(capsys):
    assert main(["vertices", "--n", "5", "--k", "3", "--s", "2"]) == 2
    assert "n=5" in capsys.readouterr().err


def test_dot_only_for_graphs(capsys):
    assert main(["vertices", "--n", "9", "--k", "3", "--s", "2", "--format", "dot"]) == 2


def test_usage_error_exit_2():
    assert run_cli("cycle", "--n", "9").returncode == 2
    assert run_cli("frobnicate").returncode == 2


def test_vertices_outputs(capsys):
    main(["vertices", "--n", "6", "--k", "3", "--s", "2"])
    assert capsys.readouterr().out == "{1,3,5}\n{2,4,6}\n"
    main(["vertices", "--n", "6", "--k", "3", "--s", "2", "--format", "jsonl"])
    assert capsys.readouterr().out == '{"v":[1,3,5]}\n{"v":[2,4,6]}\n'


def test_sck_and_tree_formats(capsys):
    assert main(["sck", "--n", "9", "--k", "3", "--s", "2", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph SCK {") and out.count(" -- ") == 5
    assert main(["sck", "--n", "9", "--k", "3", "--s", "2", "--format", "jsonl"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5
    assert main(["tree", "--n", "9", "--k", "3", "--s", "2", "--format", "jsonl"]) == 0
    rows = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert rows[0] == {
        "class": [1, 1, 4], "level": 0, "parent": None,
        "children": [[1, 2, 3], [1, 3, 2]], "anchor": [1, 3, 5],
    }
    assert main(["tree", "--n", "9", "--k", "3", "--s", "2", "--format", "dot"]) == 0
    assert capsys.readouterr().out.count("->") == 3


def test_stats_and_claims(capsys):
    assert main(["stats", "--n", "9", "--k", "3", "--s", "2", "--format", "jsonl"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["vertices"] == 30 and stats["order_histogram"] == {"3": 1, "9": 3}
    assert stats["degree_histogram"] == {"2": 2, "3": 2}
    assert main(["claims", "--n", "9", "--k", "3", "--s", "2"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "rotation_invariance: pass" in out


def test_output_deterministic():
    a = run_cli("cycle", "--n", "12", "--k", "4", "--s", "2").stdout
    b = run_cli("cycle", "--n", "12", "--k", "4", "--s", "2").stdout
    assert a == b and a


def test_read_cycle_mixed():
    assert read_cycle(['{"v":[1,3,5]}', "{2,4,6}", "", "junk"]) == [(1, 3, 5), (2, 4, 6), ()]

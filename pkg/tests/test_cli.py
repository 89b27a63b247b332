import json
import subprocess
import sys

import pytest

from signed_degrees import SignedGraph, from_json, signed_degree_set, to_json
from signed_degrees.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_realize_json(capsys):
    status, out, _ = run(capsys, "realize", "--set", "1,2,3", "--format", "json")
    graph_line, summary = out.strip().splitlines()
    assert status == 0
    assert summary == "order=4 degree_set={1,2,3}"
    assert signed_degree_set(from_json(graph_line)) == {1, 2, 3}


def test_realize_negative_values_without_escaping(capsys):
    status, out, _ = run(capsys, "realize", "--set", "-2,0,-1", "--format", "dot")
    assert status == 0
    assert out.startswith("graph G {")
    assert out.strip().endswith("degree_set={-2,-1,0}")


def test_realize_dedupes_with_warning(capsys):
    status, out, err = run(capsys, "realize", "--set", "2,2,1")
    assert status == 0 and "warning" in err
    assert out.strip().endswith("degree_set={1,2}")


@pytest.mark.parametrize("method", ["chartrand", "yan", "oracle"])
def test_check_not_graphical(capsys, method):
    status, out, _ = run(capsys, "check", "--sequence", "2,2,-2", "--method", method)
    assert (status, out) == (1, "not graphical\n")


@pytest.mark.parametrize("method", ["chartrand", "yan", "oracle"])
def test_check_witness(capsys, method):
    status, out, _ = run(capsys, "check", "--sequence", "-1,1,2,0", "--method", method, "--witness")
    verdict, graph = out.strip().splitlines()
    assert (status, verdict) == (0, "graphical")
    assert sorted(from_json(graph).degrees()) == [-1, 0, 1, 2]


def test_min_order(capsys):
    assert run(capsys, "min-order", "--set", "1,2") == (0, "3\n", "")
    assert run(capsys, "min-order", "--set", "0,1", "--no-connected")[:2] == (0, "3\n")


def test_verify_end_to_end(tmp_path, capsys):
    path = tmp_path / "g.json"
    assert run(capsys, "realize", "--set", "-3,0,2", "--out", str(path))[0] == 0
    status, out, _ = run(capsys, "verify", str(path), "--expect-set", "-3,0,2")
    assert status == 0 and out.splitlines()[-1] == "match"
    status, out, _ = run(capsys, "verify", str(path), "--expect-set", "2")
    assert status == 1 and out.startswith("order=")


def test_verify_reports_disconnected(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(to_json(SignedGraph.empty(2)))
    status, out, _ = run(capsys, "verify", str(path))
    assert status == 0 and out == "order=2 degree_set={0} connected=false\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--sequence", "1,x"],
        ["realize", "--set", "1", "--bogus"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--sequence", "0,0,0,0,0,0,0", "--method", "oracle"],
        ["min-order", "--set", "7"],
        ["min-order", "--set", "1", "--max-order", "8"],
        ["realize", "--set", ""],
    ],
)
def test_runtime_errors_exit_2(argv, capsys):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == ""
    assert err.startswith("error:") and err.count("\n") == 1


def test_bad_graph_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"order":2,"edges":[[0,0,1]]}')
    status, _, err = run(capsys, "verify", str(path))
    assert status == 2 and "loop" in err
    status, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert status == 2


def test_methods_agree(capsys):
    for seq in ["1,1,0", "3,-1,-1,-1", "2,1,1,-2", "1,1,1,-1,-2"]:
        verdicts = {run(capsys, "check", "--sequence", seq, "--method", m)[1] for m in ("chartrand", "yan", "oracle")}
        assert len(verdicts) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "signed_degrees", "realize", "--set", "1,-1,0"],
        capture_output=True, text=True, check=True,
    )
    graph_line, summary = proc.stdout.splitlines()
    assert summary == "order=5 degree_set={-1,0,1}"
    assert json.loads(graph_line)["order"] == 5

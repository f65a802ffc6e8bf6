import json
import subprocess
import sys

import pytest

from radsq.cli import main
from radsq.harness import AnalysisReport
from radsq.rep import load_representation


@pytest.fixture
def qdir(tmp_path):
    files = {
        "delta32.quiver": "3\n0 1 0\n0 0 1\n2 0 0\n",
        "delta42.quiver": "# Delta(4, 4)\n4\n0 1 0 0\n0 0 1 0\n0 0 0 1\n2 0 0 0\n",
        "delta22.quiver": "2\n0 1\n2 0\n",
        "delta12.quiver": "1\n2\n",
        "delta21.quiver": "2\n0 1\n1 0\n",
        "a2.quiver": "2\n0 1\n0 0\n",
        "bad.quiver": "2\n0 -1\n0 0\n",
        "split.quiver": "2\n1 0\n0 1\n",
    }
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_human(qdir, capsys):
    code, out, _ = run(capsys, "analyze", qdir / "delta32.quiver")
    assert code == 0
    assert "Delta(3, t=4), m=2" in out
    assert "S(0): 2 0 0 3 0   Nakayama degree 3" in out
    assert "in:2 => [0] -1-> [1] -1-> [2] => out:2" in out
    assert "oracle (F_2, F_5): agreement" in out


def test_analyze_json_round_trip(qdir, capsys):
    code, out, _ = run(capsys, "analyze", qdir / "a2.quiver", "--json")
    assert code == 0
    rep = AnalysisReport.from_json(out.strip())
    assert rep.to_json() == out.strip()
    assert rep.nakayama == [1, 0]


def test_analyze_depth(qdir, capsys):
    code, out, _ = run(capsys, "analyze", qdir / "delta21.quiver", "--depth", "6", "--json")
    assert code == 0
    assert json.loads(out)["profiles"] == [[1, 0, 0, 0, 0, 0, 0]] * 2


@pytest.mark.parametrize("name, fragment", [
    ("missing.quiver", "No such file"),
    ("bad.quiver", "line 2, column 2"),
    ("split.quiver", "not connected"),
])
def test_analyze_input_errors(qdir, capsys, name, fragment):
    code, _, err = run(capsys, "analyze", qdir / name)
    assert code == 1 and fragment in err


def test_resolve(qdir, capsys):
    code, out, _ = run(capsys, "resolve", qdir / "delta42.quiver", "--vertex", "0", "--steps", "4")
    assert code == 0
    lines = out.splitlines()
    assert [ln.split("=")[1].split()[0] for ln in lines] == ["S(0)", "S(1)", "S(2)", "S(3)", "2*S(0)"]
    assert [int(ln.rsplit("=", 1)[1]) for ln in lines][1:] == [0, 0, 0, 3]

    code, out, _ = run(capsys, "resolve", qdir / "delta21.quiver", "--vertex", "0", "--steps", "6")
    assert code == 0
    assert [int(ln.rsplit("=", 1)[1]) for ln in out.splitlines()][1:] == [0] * 6

    code, out, _ = run(capsys, "resolve", qdir / "a2.quiver", "--vertex", "1", "--steps", "2")
    assert [ln.split("=")[1].split()[0] for ln in out.splitlines()] == ["S(1)", "0", "0"]


def test_resolve_bad_vertex(qdir, capsys):
    code, _, err = run(capsys, "resolve", qdir / "a2.quiver", "--vertex", "5", "--steps", "2")
    assert code == 1 and "out of range" in err


def test_taurinv(qdir, capsys):
    code, out, _ = run(capsys, "taurinv", qdir / "delta12.quiver", "--field", "5")
    assert code == 0
    assert out.count("[PASS]") == 6 and "[FAIL]" not in out
    assert "reference length t^2+t-1 = 19: differs (computed 5" in out

    code, out, _ = run(capsys, "taurinv", qdir / "delta22.quiver", "--dump")
    assert code == 0 and "[FAIL]" not in out
    dump = out[out.index("field 5"):]
    M = load_representation(dump)
    assert M.total_dim == 5


@pytest.mark.parametrize("argv", [
    ["taurinv", "a2.quiver"],
    ["taurinv", "delta21.quiver"],
    ["taurinv", "delta22.quiver", "--field", "4"],
])
def test_taurinv_rejects(qdir, capsys, argv):
    code, _, _ = run(capsys, argv[0], qdir / argv[1], *argv[2:])
    assert code == 1


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "6", "--maxmult", "9")
    assert code == 1 and "limit" in err


def test_enumerate_random_reproducible(tmp_path, capsys):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.jsonl"
        code, _, err = run(capsys, "enumerate", "--n", "4", "--maxmult", "3", "--mode", "random",
                           "--count", "20", "--seed", "7", "--out", path)
        assert code == 0 and "20 quivers" in err
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert all(json.loads(line)["n"] == 4 for line in outs[0].splitlines())


def test_enumerate_stdout(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--maxmult", "2")
    assert code == 0
    assert [json.loads(line)["quiver"] for line in out.splitlines()] == [[[0]], [[1]], [[2]]]


def test_enumerate_violation_exit_code(capsys, monkeypatch):
    import radsq.harness as harness
    from radsq import ext

    real = ext.ext1_simple_vs_proj_dim
    monkeypatch.setattr(harness.ext, "ext1_simple_vs_proj_dim", lambda q, j, i: real(q, j, i) + 1)
    code, _, err = run(capsys, "enumerate", "--n", "1", "--maxmult", "1")
    assert code == 2
    assert "counterexample" in json.loads(err.strip().splitlines()[-1])


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "analyze")[0] == 1
    assert run(capsys, "--help")[0] == 0


def test_console_script(qdir):
    proc = subprocess.run([sys.executable, "-m", "radsq", "resolve", str(qdir / "a2.quiver"),
                           "--vertex", "0", "--steps", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Omega^1 S(0) = S(1)" in proc.stdout

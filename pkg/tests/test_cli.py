import json
import subprocess
import sys

import pytest

from tannercycles import GenSpec, build_graph, generate, read_graph, write_graph
from tannercycles.cli import main

from graphs import TANNER_ALIST, irregular_g4


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_tanner_json(capsys):
    code, out, _ = run(capsys, "count", "--input", str(TANNER_ALIST), "--lengths", "auto", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == {"8": 465, "10": 3720, "12": 22630}
    assert doc["girth"] == 8 and doc["class"] == "BiRegular(3,5)"
    assert set(doc) >= {"girth", "class", "counts", "traces", "methods", "capability"}
    # counts stay integers, never floats
    assert '"8": 465' in out and "465.0" not in out
    assert all(isinstance(v, int) for v in doc["counts"].values())


def test_count_text(capsys):
    code, out, _ = run(capsys, "count", "-i", str(TANNER_ALIST), "--lengths", "8,10")
    assert code == 0
    assert "N_8 = 465" in out and "N_10 = 3720" in out


def test_count_refusal_cites_ip(tmp_path, capsys):
    star = tmp_path / "star.el"
    write_graph(irregular_g4(), star)
    code, out, err = run(capsys, "count", "--input", str(star), "--lengths", "6")
    assert code == 3
    assert "IP" in err and "IP" in out


def test_count_refusal_json(tmp_path, capsys):
    star = tmp_path / "star.el"
    write_graph(irregular_g4(), star)
    code, out, _ = run(capsys, "count", "--input", str(star), "--lengths", "4,6", "--json")
    assert code == 3
    doc = json.loads(out)
    assert doc["counts"] == {"4": 1} and doc["capability"] == {"6": "IP"}


def test_verify_random_34(tmp_path, capsys):
    path = tmp_path / "random.el"
    assert run(capsys, "gen", "--kind", "biregular", "--n", "24", "--dv", "3", "--dc", "4",
               "--seed", "3", "--out", str(path))[0] == 0
    g = read_graph(path)
    assert set(g.u_degrees()) == {3} and set(g.w_degrees()) == {4}
    code, out, _ = run(capsys, "verify", "--input", str(path), "--max-len", "8")
    assert code == 0 and "MISMATCH" not in out


def test_verify_mismatch_exit(tmp_path, capsys, monkeypatch):
    path = tmp_path / "g.el"
    write_graph(generate(GenSpec.biregular(12, 2, 3, seed=1)), path)
    import tannercycles.cli as cli
    monkeypatch.setattr(cli, "backtrack_cycle_count",
                        lambda graph, max_len, budget: {i: -1 for i in range(4, max_len + 1, 2)})
    code, out, err = run(capsys, "verify", "--input", str(path), "--max-len", "8", "--json")
    assert code == 4
    assert json.loads(out)["ok"] is False


def test_girth_traces_oracle(capsys):
    code, out, _ = run(capsys, "girth", "-i", str(TANNER_ALIST), "--json")
    assert code == 0 and json.loads(out) == {"girth": 8, "class": "BiRegular(3,5)"}
    code, out, _ = run(capsys, "traces", "-i", str(TANNER_ALIST), "--kmax", "8", "--json")
    assert json.loads(out)["traces"]["8"] == 475230
    code, out, _ = run(capsys, "traces", "-i", str(TANNER_ALIST), "--kmax", "4", "--method", "direct")
    assert "tr(A^4) = 6510" in out
    code, out, _ = run(capsys, "oracle", "-i", str(TANNER_ALIST), "--max-len", "8")
    assert code == 0 and "N_8 = 465" in out


def test_gen_formats(tmp_path, capsys):
    out = tmp_path / "g.alist"
    assert run(capsys, "gen", "--kind", "irregular", "--n", "8", "--m", "6", "--p", "0.4",
               "--seed", "2", "--out", str(out))[0] == 0
    assert read_graph(out) == generate(GenSpec.irregular(8, 6, 0.4, seed=2))
    out = tmp_path / "v.el"
    assert run(capsys, "gen", "--kind", "variable-regular", "--n", "10", "--dv", "2",
               "--wmin", "1", "--wmax", "4", "--out", str(out))[0] == 0
    assert run(capsys, "gen", "--kind", "complete", "--n", "2", "--m", "3",
               "--out", str(out))[0] == 0


@pytest.mark.parametrize("argv", [
    ["gen", "--kind", "biregular", "--n", "10", "--out", "x.el"],
    ["gen", "--kind", "biregular", "--n", "10", "--dv", "3", "--dc", "4", "--out", "x.el"],
])
def test_gen_errors(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(capsys, *argv)[0] == 2


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "count", "-i", str(tmp_path / "missing.el"))[0] == 2
    bad = tmp_path / "bad.el"
    bad.write_text("bipartite 2 2\n2 0\n")
    code, _, err = run(capsys, "count", "-i", str(bad))
    assert code == 2 and "error" in err
    weird = tmp_path / "g.xyz"
    weird.write_text("bipartite 1 1\n0 0\n")
    assert run(capsys, "girth", "-i", str(weird))[0] == 2
    assert run(capsys, "girth", "-i", str(weird), "--format", "edgelist")[0] == 0
    assert run(capsys, "count", "-i", str(bad), "--lengths", "a,b")[0] == 2


def test_resource_exit(tmp_path, capsys):
    path = tmp_path / "k.el"
    write_graph(generate(GenSpec.complete(7, 7)), path)
    code, _, err = run(capsys, "oracle", "-i", str(path), "--max-len", "14", "--budget", "100")
    assert code == 5 and "100" in err


def test_empty_graph(tmp_path, capsys):
    path = tmp_path / "e.el"
    path.write_text("bipartite 3 3\n")
    code, out, _ = run(capsys, "count", "-i", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["girth"] is None and doc["counts"] == {"4": 0}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tannercycles", "girth", "-i", str(TANNER_ALIST)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "girth 8" in proc.stdout


def test_auto_with_nothing_countable(tmp_path, capsys):
    # a 12-cycle with one extra variable node across it: variable-regular,
    # girth 8, and every one of g, g+2, g+4 is IP
    ring = [(k, k) for k in range(6)] + [(k, (k + 1) % 6) for k in range(6)]
    g = build_graph(7, 6, ring + [(6, 0), (6, 3)])
    path = tmp_path / "g.el"
    write_graph(g, path)
    code, out, _ = run(capsys, "count", "-i", str(path), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["counts"] == {} and set(doc["capability"].values()) == {"IP"}

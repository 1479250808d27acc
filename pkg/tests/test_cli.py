from __future__ import annotations

import json
import subprocess
import sys

import pytest

from strongcolor.cli import main
from strongcolor.io import parse_coloring_file, parse_graph_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def prism(tmp_path, capsys):
    path = tmp_path / "prism.secg"
    assert run(capsys, "gen", "prism", "-o", str(path))[0] == 0
    return path


def test_gen_stdout(capsys):
    code, out, _ = run(capsys, "gen", "ckd", "--k", "5", "--d", "5")
    g, emb = parse_graph_file(out)
    assert code == 0 and g.m == 20 and emb is not None


def test_gen_subdivide(tmp_path, capsys):
    path = tmp_path / "c.secg"
    run(capsys, "gen", "hex", "--rings", "1", "-o", str(path))
    code, out, _ = run(capsys, "gen", "subdivide", str(path), "--edge", "0", "1", "--times", "1")
    assert code == 0 and parse_graph_file(out)[0].m == 7
    code, out, _ = run(capsys, "gen", "subdivide", str(path), "--times", "2")
    assert parse_graph_file(out)[0].m == 18


def test_solve_prism_json(prism, tmp_path, capsys):
    cert = tmp_path / "p.secc"
    code, out, _ = run(capsys, "--json", "solve", str(prism), "--certificate", str(cert))
    data = json.loads(out)
    assert code == 0 and data["chi_s"] == 9
    assert list(data) == ["chi_s", "certified_infeasible", "nodes", "seconds", "witness"]
    assert parse_coloring_file(cert.read_text()).num_colors() == 9


def test_solve_budget(tmp_path, capsys):
    path = tmp_path / "c.secg"
    run(capsys, "gen", "ckd", "--k", "5", "--d", "5", "-o", str(path))
    code, out, _ = run(capsys, "solve", str(path), "--node-limit", "3")
    assert code == 1 and "undetermined" in out


def test_verify(prism, tmp_path, capsys):
    cert = tmp_path / "p.secc"
    run(capsys, "solve", str(prism), "--certificate", str(cert))
    code, out, _ = run(capsys, "verify", str(prism), str(cert))
    assert code == 0 and "valid" in out
    lines = cert.read_text().splitlines()
    # give the first two edges (which share vertex 0) the same color
    first, second = lines[2].split(), lines[3].split()
    lines[3] = f"{second[0]} {second[1]} {first[2]}"
    cert.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "--json", "verify", str(prism), str(cert))
    data = json.loads(out)
    assert code == 1 and data["status"] == "invalid" and data["conflicts"][0]["distance"] == 1


def test_verify_partial(prism, tmp_path, capsys):
    cert = tmp_path / "p.secc"
    cert.write_text("secc 1\np 9\n0 2 1\n")
    code, out, _ = run(capsys, "verify", str(prism), str(cert))
    assert code == 1 and "partial" in out


@pytest.mark.parametrize("mode", ["auto", "girth6", "greedy", "exact"])
def test_color_modes(tmp_path, capsys, mode):
    path = tmp_path / "c.secg"
    run(capsys, "gen", "ckd", "--k", "7", "--d", "4", "-o", str(path))
    code, out, _ = run(capsys, "--json", "color", str(path), "--mode", mode)
    data = json.loads(out)
    assert code == 0 and data["status"] == "valid"
    assert data["colors_used"] <= data["budget"]


def test_color_subcubic(tmp_path, capsys):
    path = tmp_path / "h.secg"
    run(capsys, "gen", "hex", "--rings", "3", "-o", str(path))
    cert = tmp_path / "h.secc"
    code, out, _ = run(capsys, "color", str(path), "--mode", "subcubic", "--certificate", str(cert))
    assert code == 0 and "valid" in out
    assert run(capsys, "verify", str(path), str(cert))[0] == 0


def test_color_girth_error(prism, capsys):
    code, _, err = run(capsys, "color", str(prism))
    assert code == 2 and "girth" in err


def test_color_greedy_small_palette(prism, capsys):
    code, out, _ = run(capsys, "color", str(prism), "--mode", "greedy", "--palette", "5")
    assert code == 1 and "palette-exhausted" in out


def test_color_needs_embedding(tmp_path, capsys):
    path = tmp_path / "e.secg"
    path.write_text("secg 1\nv 7\n" + "".join(f"e {i} {(i + 1) % 7}\n" for i in range(7)))
    code, _, err = run(capsys, "color", str(path))
    assert code == 2 and "embedding" in err


def test_discharge(tmp_path, capsys):
    path = tmp_path / "h.secg"
    run(capsys, "gen", "hex", "--rings", "2", "-o", str(path))
    code, out, _ = run(capsys, "--json", "discharge", str(path), "--mode", "subcubic", "--transfers")
    data = json.loads(out)
    assert code == 0 and data["initial_total"] == data["final_total"] == -12
    assert data["transfers"] and data["transfers"][0]["rule"] == "R"
    code, out, _ = run(capsys, "discharge", str(path))
    assert code == 0 and "object" in out


def test_bounds(capsys):
    assert json.loads(run(capsys, "--json", "bounds", "erdos-nesetril", "--delta", "5")[1])["bound"] == 29
    data = json.loads(run(capsys, "--json", "bounds", "ckd", "--k", "5", "--d", "5")[1])
    assert (data["lower"], data["upper"]) == (10, 13)
    assert json.loads(run(capsys, "--json", "bounds", "molloy-reed", "--delta", "5")[1])["bound"] == "999/20"
    data = json.loads(run(capsys, "--json", "bounds", "conjecture19", "--k", "5", "--delta", "5", "--C", "1/2")[1])
    assert data["bound"] == "21/2"
    code, _, err = run(capsys, "bounds", "ckd", "--k", "5")
    assert code == 2 and "--d" in err
    assert run(capsys, "bounds", "ckd", "--k", "4", "--d", "5")[0] == 2


def test_corpus(tmp_path, capsys):
    out_dir = tmp_path / "corpus"
    argv = ["--json", "corpus", "--family", "subcubic", "--count", "8"]
    code, out, _ = run(capsys, *argv, "--out", str(out_dir), "--check")
    data = json.loads(out)
    assert code == 0 and data["failures"] == 0 and data["instances"] == 8
    assert len(list(out_dir.glob("*.secg"))) == 8
    again = json.loads(run(capsys, *argv)[1])
    assert [r["name"] for r in again["corpus"]] == [r["name"] for r in data["corpus"]]


def test_missing_file(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent/graph.secg")
    assert code == 2 and "cannot read" in err


def test_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.secg"
    path.write_text("secg 1\nv 2\ne 0 5\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "line 3" in err


def test_module_entry_usage_error():
    proc = subprocess.run([sys.executable, "-m", "strongcolor", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_stdin(prism, capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(prism.read_text()))
    code, out, _ = run(capsys, "solve", "-")
    assert code == 0 and "chi_s" in out

from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pydot
import pytest

from oneplane.cli import run
from oneplane.constructions import gen_theorem2, gen_theorem2_general
from oneplane.core import OnePlaneDrawing, planarize
from oneplane.export import to_dot, to_svg
from oneplane.fileio import load, save
from oneplane.library import prism


@pytest.fixture
def t2(tmp_path):
    path = tmp_path / "t2.1pg"
    assert run(["gen", "thm2", "--k", "2", "-o", str(path)]) == 0
    return path


def test_gen_round_trip(t2):
    assert load(t2) == gen_theorem2(2)


def test_check(t2, capsys):
    assert run(["check", str(t2)]) == 0
    out = capsys.readouterr().out
    assert "kappa: 3" in out
    assert "edges: 36" in out
    assert "crossings: 6" in out
    assert "crossing edges: 12" in out
    assert "degrees: 3-regular" in out


def test_solve_components(t2, capsys):
    assert run(["solve", str(t2), "--objective", "components", "--mode", "exact"]) == 0
    assert "optimal components = 2" in capsys.readouterr().out


def test_solve_json_and_l(tmp_path, capsys):
    path = tmp_path / "t4.1pg"
    assert run(["gen", "thm4", "--k", "2", "-o", str(path)]) == 0
    out = tmp_path / "r.json"
    code = run(["solve", str(path), "--objective", "l-connected", "--l", "3", "--deterministic", "--json", str(out)])
    assert code == 0
    assert "proven_impossible" in capsys.readouterr().out
    assert json.loads(out.read_text())["status"] == "proven_impossible"


def test_solve_heuristic(t2, capsys):
    assert run(["solve", str(t2), "--objective", "components", "--mode", "heuristic", "--budget", "5"]) == 0
    assert "components = 2" in capsys.readouterr().out


@pytest.mark.parametrize(
    "family, args",
    [("thm2gen", ["--base", "cube"]), ("thm3", ["--base", "prism3"]), ("seven", ["--k", "2"]), ("gadget", ["--k", "5"])],
)
def test_gen_families(tmp_path, family, args):
    path = tmp_path / "x.1pg"
    assert run(["gen", family, *args, "-o", str(path)]) == 0
    assert load(path).graph.n > 0


def test_gen_base_from_file(tmp_path):
    base = tmp_path / "cube.1pg"
    save(OnePlaneDrawing(prism(4)), base)
    out = tmp_path / "o.1pg"
    assert run(["gen", "thm2gen", "--base", str(base), "-o", str(out)]) == 0
    assert load(out) == gen_theorem2_general(prism(4))
    # a drawing with crossings is not a plane base
    crossed = tmp_path / "k4x.1pg"
    assert run(["gen", "gadget", "--k", "4", "-o", str(crossed)]) == 0
    assert run(["gen", "thm3", "--base", str(crossed), "-o", str(out)]) == 1


def test_export_dot_parses(t2, tmp_path):
    out = tmp_path / "t2.dot"
    assert run(["export", str(t2), "--format", "dot", "-o", str(out)]) == 0
    (graph,) = pydot.graph_from_dot_data(out.read_text())
    edges = graph.get_edges()
    assert len(edges) == 36
    assert sum(1 for e in edges if e.get("style") == "dashed") == 12


def test_export_svg(t2, tmp_path):
    out = tmp_path / "t2.svg"
    assert run(["export", str(t2), "--format", "svg", "-o", str(out)]) == 0
    root = ET.parse(out).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f".//{ns}rect")) == 6
    d = gen_theorem2(2)
    assert len(root.findall(f".//{ns}line")) == planarize(d).graph.m
    assert len(root.findall(f".//{ns}circle")) == 24


def test_export_functions_directly():
    d = gen_theorem2(2)
    assert to_dot(d).startswith("graph G {")
    assert to_svg(d).startswith("<svg")


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert run(["verify", "prop2", "--k", "4", "-o", str(out)]) == 0
    assert json.loads(out.read_text())["overall"] == "pass"
    assert (tmp_path / "rep_artifacts" / "gadget4.1pg").exists()
    assert run(["verify", "thm4", "--k", "2", "--nodes", "1"]) == 1


def test_usage_errors(capsys):
    assert run(["bogus"]) == 2
    assert run(["gen", "thm2", "--k", "2"]) == 2
    assert run(["gen", "thm2", "--base", "cube", "-o", "x.1pg"]) == 2
    assert run(["verify", "prop2", "--base", "cube"]) == 2
    assert run(["solve", "x.1pg", "--objective", "components", "--frobnicate"]) == 2


def test_bad_input_file(tmp_path, capsys):
    bad = tmp_path / "bad.1pg"
    bad.write_text("not a drawing\n")
    assert run(["check", str(bad)]) == 1
    assert "line 1" in capsys.readouterr().err
    assert run(["check", str(tmp_path / "missing.1pg")]) == 1


def test_corpus_command(capsys):
    assert run(["corpus"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.1pg"
    proc = subprocess.run([sys.executable, "-m", "oneplane", "gen", "thm2", "--k", "2", "-o", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run([sys.executable, "-m", "oneplane", "check", str(path)], capture_output=True, text=True)
    assert "kappa: 3" in proc.stdout

import json
import subprocess
import sys

import pytest

from geothick.cli import main
from geothick.formats import coords_to_json, graph_to_json, save_drawing
from geothick.geometry import Point as P
from geothick.graphs import complete_graph, cycle_graph, incidence_subgraph
from geothick.drawings import LayeredDrawing


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _write(path, doc):
    path.write_text(json.dumps(doc))
    return path


def test_gen(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert _run(capsys, "gen", "--k", 3, "--n", 5, "--out", out)[0] == 0
    doc = json.loads(out.read_text())
    assert len(doc["vertices"]) == 15 and len(doc["edges"]) == 30
    code, text, _ = _run(capsys, "gen", "--k", 3, "--n", 3)
    assert code == 0 and len(json.loads(text)["vertices"]) == 4
    assert _run(capsys, "gen", "--k", 1, "--n", 3)[0] == 2


def test_construct_and_verify(tmp_path, capsys):
    g38 = tmp_path / "g38.json"
    assert _run(capsys, "construct", "g38", "--out", g38)[0] == 0
    assert _run(capsys, "verify", g38, "--kind", "geom", "--t", 3)[0] == 0
    assert _run(capsys, "verify", g38, "--kind", "geom", "--t", 2)[0] == 1
    stars = tmp_path / "stars.json"
    assert _run(capsys, "construct", "layering3", "--n", 10, "--out", stars)[0] == 0
    assert _run(capsys, "verify", stars, "--kind", "abstract", "--t", 3)[0] == 0
    code, text, _ = _run(capsys, "construct", "upper", "--n", 6, "--out", tmp_path / "u.json")
    assert code in (0, 1) and "verified" in text
    assert _run(capsys, "construct", "upper")[0] == 2


def test_verify_k4_one_layer(tmp_path, capsys):
    d = LayeredDrawing(complete_graph(4), [P(0, 0), P(2, 0), P(2, 2), P(0, 2)], [0] * 6)
    path = tmp_path / "k4.json"
    save_drawing(path, d)
    code, text, _ = _run(capsys, "--json", "verify", path, "--kind", "geom", "--t", 1)
    assert code == 1
    assert len(json.loads(text)["report"]["crossings"]) == 1


def test_verify_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert _run(capsys, "verify", bad, "--t", 1)[0] == 2
    assert _run(capsys, "verify", tmp_path / "missing.json", "--t", 1)[0] == 2


def test_classify(tmp_path, capsys):
    fixture = tmp_path / "fixture.json"
    assert _run(capsys, "construct", "fixture", "--character", "concave", "--out", fixture)[0] == 0
    code, text, _ = _run(capsys, "classify", fixture, "--json")
    doc = json.loads(text)
    assert code == 0 and doc["inner_outer"] == "Inner" and doc["coherent"]
    g = incidence_subgraph(5, 3, [(0, 1, 2)])
    square_and_centre = [P(0, 0), P(0, 4), P(4, 4), P(4, 0), P(2, 2), P(9, 9)]
    path = tmp_path / "nonconvex.json"
    save_drawing(path, LayeredDrawing(g, square_and_centre, [0, 1, 2]))
    code, _, err = _run(capsys, "classify", path)
    assert code == 2 and "convex" in err


def test_search_commands(tmp_path, capsys):
    k4 = _write(tmp_path / "k4.json", graph_to_json(complete_graph(4)))
    convex = _write(tmp_path / "convex.json", coords_to_json([P(0, 0), P(2, 0), P(2, 2), P(0, 2)]))
    assert _run(capsys, "search", "book", "--graph", k4, "--cap", 3)[1].strip() == "2"
    assert _run(capsys, "search", "fixed", "--graph", k4, "--coords", convex)[1].strip() == "2"
    c6 = _write(tmp_path / "c6.json", graph_to_json(cycle_graph(6)))
    assert _run(capsys, "search", "placement", "--graph", c6, "--strategy", "convex")[1].strip() == "1"
    code, text, _ = _run(capsys, "search", "refute", "--n", 4, "--type", "201", "--grid", 5)
    assert code == 0 and "no witness" in text
    code, text, _ = _run(capsys, "--json", "search", "refute", "--n", 3, "--type", "012", "--grid", 3)
    assert code == 1 and "witness" in json.loads(text)
    assert _run(capsys, "search", "fixed", "--graph", k4)[0] == 2


@pytest.mark.parametrize("argv, expected", [
    (["bounds", "es", "--k", "5"], "21"),
    (["bounds", "classes", "--t", "4"], "7"),
    (["bounds", "ramsey", "--e", "2", "--l", "3", "--c", "2"], "6"),
])
def test_bounds(capsys, argv, expected):
    code, text, _ = _run(capsys, *argv)
    assert code == 0 and text.strip() == expected


def test_bounds_missing_flag(capsys):
    assert _run(capsys, "bounds", "ramsey", "--e", "2")[0] == 2


def test_svg(tmp_path, capsys):
    drawing = tmp_path / "fixture.json"
    _run(capsys, "construct", "fixture", "--out", drawing)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert _run(capsys, "svg", drawing, "--out", a)[0] == 0
    assert _run(capsys, "svg", drawing, "--out", b, "--labels")[0] == 0
    text = a.read_text()
    assert text.startswith("<?xml") or text.startswith("<svg")
    assert "<circle" in text and "<polygon" in text
    _run(capsys, "svg", drawing, "--out", b)
    assert a.read_bytes() == b.read_bytes()
    assert _run(capsys, "svg", tmp_path / "missing.json")[0] == 2


def test_separate_process_round_trip(tmp_path):
    out = tmp_path / "g38.json"
    cmd = [sys.executable, "-m", "geothick.cli"]
    subprocess.run(cmd + ["construct", "g38", "--out", str(out), "--quiet"], check=True)
    done = subprocess.run(cmd + ["verify", str(out), "--t", "3"], capture_output=True, text=True)
    assert done.returncode == 0


def test_deterministic_search_output(tmp_path, capsys):
    k5 = _write(tmp_path / "k5.json", graph_to_json(complete_graph(5)))
    runs = []
    for name in ("a.json", "b.json"):
        _run(capsys, "search", "placement", "--graph", k5, "--strategy", "random",
             "--seed", 4, "--trials", 50, "--out", tmp_path / name)
        runs.append((tmp_path / name).read_bytes())
    assert runs[0] == runs[1]

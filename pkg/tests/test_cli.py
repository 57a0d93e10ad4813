import json
import subprocess
import sys

import pytest

from rainbowconn import io
from rainbowconn.cli import main
from rainbowconn.coloring import EdgeColoring
from rainbowconn.graph import build_cycle


def load(path):
    return json.loads(path.read_text())


@pytest.fixture
def g33(tmp_path):
    path = tmp_path / "G.json"
    assert main(["construct", "--a", "3", "--b", "3", "--out", str(path)]) == 0
    return path


def test_construct(g33):
    obj = load(g33)
    assert obj["n"] == 21 and len(obj["edges"]) == 55
    assert obj["labels"] == {
        "cycle": list(range(18)), "w": 18, "v": 19, "path": [20], "a": 3, "b": 3, "cycle_n": 18,
    }


def test_color_and_verify(g33, tmp_path):
    rc, report = tmp_path / "rc.json", tmp_path / "r.json"
    assert main(["color", "--graph", str(g33), "--scheme", "rc", "--out", str(rc)]) == 0
    assert load(rc)["k"] == 3
    args = ["verify", "--graph", str(g33), "--coloring", str(rc), "--report", str(report)]
    assert main(args + ["--mode", "rainbow"]) == 0
    assert load(report) == {"mode": "rainbow", "passed": True, "violating_pair": None, "checked_pairs": 210}
    assert main(args + ["--mode", "strong"]) == 1
    rep = load(report)
    assert rep["passed"] is False and rep["violating_pair"] == [0, 2]

    src = tmp_path / "src.json"
    assert main(["color", "--graph", str(g33), "--scheme", "src", "--out", str(src)]) == 0
    args[4] = str(src)
    assert main(args + ["--mode", "strong"]) == 0


def test_color_requires_labels(tmp_path):
    g = tmp_path / "c4.json"
    g.write_text(io.dumps(io.graph_to_json(build_cycle(4))))
    assert main(["color", "--graph", str(g), "--scheme", "rc", "--out", str(tmp_path / "o.json")]) == 64


def test_solve(tmp_path, g33):
    g = tmp_path / "c6.json"
    g.write_text(io.dumps(io.graph_to_json(build_cycle(6))))
    out = tmp_path / "s.json"
    assert main(["solve", "--graph", str(g), "--kind", "src", "--out", str(out)]) == 0
    res = load(out)
    assert res["kind"] == "src" and res["value"] == 3 and res["colorings_tested"] >= 1
    assert main(["solve", "--graph", str(g33), "--kind", "rc", "--out", str(out)]) == 2
    assert main(["solve", "--graph", str(g), "--kind", "rc", "--k-max", "2", "--out", str(out)]) == 65


def test_audit(tmp_path, g33):
    c = tmp_path / "c.json"
    c.write_text(io.dumps({"k": 2, "colors": [1] * 54 + [2]}))
    out = tmp_path / "t.json"
    assert main(["audit", "--a", "3", "--b", "3", "--coloring", str(c), "--out", str(out)]) == 0
    assert load(out)["kind"] in ("early", "trace")
    src = tmp_path / "src.json"
    main(["color", "--graph", str(g33), "--scheme", "src", "--out", str(src)])
    assert main(["audit", "--a", "3", "--b", "3", "--coloring", str(src), "--out", str(out)]) == 65
    assert main(["audit", "--a", "2", "--b", "3", "--coloring", str(src), "--out", str(out)]) == 65


def test_export(tmp_path, g33):
    rc, dot, js = tmp_path / "rc.json", tmp_path / "G.dot", tmp_path / "G2.json"
    main(["color", "--graph", str(g33), "--scheme", "rc", "--out", str(rc)])
    assert main(["export", "--graph", str(g33), "--coloring", str(rc), "--format", "dot", "--out", str(dot)]) == 0
    text = dot.read_text()
    assert text.count(" -- ") == 55 and 'label="3"' in text
    assert main(["export", "--graph", str(g33), "--format", "json", "--out", str(js)]) == 0
    assert js.read_bytes() == g33.read_bytes()


def test_sweep(tmp_path):
    rep = tmp_path / "sweep.json"
    assert main(["sweep", "--a-max", "4", "--b-max", "4", "--samples", "6", "--report", str(rep)]) == 0
    obj = load(rep)
    assert obj["all_passed"] and [(p["a"], p["b"]) for p in obj["points"]] == [(3, 3), (3, 4), (4, 4)]


def test_parse_failures(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rep = tmp_path / "r.json"
    assert main(["verify", "--graph", str(bad), "--coloring", str(bad), "--mode", "rainbow", "--report", str(rep)]) == 64
    assert main(["verify", "--graph", str(tmp_path / "missing.json"), "--coloring", str(bad),
                 "--mode", "rainbow", "--report", str(rep)]) == 64
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--a", "x", "--b", "3", "--out", "o"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 64


def test_binding_mismatch_exit_65(tmp_path):
    g = tmp_path / "c4.json"
    g.write_text(io.dumps(io.graph_to_json(build_cycle(4))))
    c = tmp_path / "c.json"
    c.write_text(io.dumps(io.coloring_to_json(EdgeColoring.of((1, 2, 1)))))
    args = ["verify", "--graph", str(g), "--coloring", str(c), "--mode", "rainbow", "--report", str(tmp_path / "r")]
    assert main(args) == 65


def test_module_entry_point(tmp_path):
    out = tmp_path / "G.json"
    proc = subprocess.run(
        [sys.executable, "-m", "rainbowconn", "construct", "--a", "4", "--b", "5", "--out", str(out)],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert load(out)["n"] == 49

import json
import math
import re
from pathlib import Path

import pytest

from wienertree import serialize
from wienertree.cli import main
from wienertree.geometry import PointSet
from wienertree.instances import gen_random_convex
from wienertree.paths import HamiltonianPath
from wienertree.tree import SpanningTree, crossing_pairs, wiener_pairwise

FIXTURE = Path(__file__).parent / "fixtures" / "convex8.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_gen_convex_deterministic(capsys):
    code, a, _ = run(capsys, "gen", "convex", "--n", "8", "--seed", "3")
    assert code == 0
    _, b, _ = run(capsys, "gen", "convex", "--n", "8", "--seed", "3")
    assert a == b
    ps = serialize.pointset_from_json(json.loads(a))
    assert ps == gen_random_convex(8, 3)


def test_gen_grid_and_counterexample(capsys):
    code, out, _ = run(capsys, "gen", "grid", "--w", "3", "--h", "2")
    assert code == 0 and len(json.loads(out)["points"]) == 6
    code, out, _ = run(capsys, "gen", "path-counterexample", "--m", "2", "--epsilon", "0.01")
    doc = json.loads(out)
    assert code == 0 and len(doc["points"]) == 6 and "labels" in doc


def test_gen_partition_sidecar(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "partition", "--x", "1,1")
    doc = json.loads(out)
    assert code == 0
    assert doc["sidecar"]["B"] == 11.5 and doc["sidecar"]["W"] == 320.5
    assert len(doc["points"]) == 14
    target = tmp_path / "inst.json"
    code, _, _ = run(capsys, "gen", "partition", "--x", "1,2,3,2", "-o", str(target))
    assert code == 0
    side = json.loads((tmp_path / "inst.sidecar.json").read_text())
    assert side["R"] == 8
    assert sum(len(v) for v in side["roles"].values()) == 4**3 + 12
    assert side["roles"]["circle"] == [64, 65, 66, 67]


def test_gen_partition_bad_input(capsys):
    assert run(capsys, "gen", "partition", "--x", "1,2")[0] == 2
    assert run(capsys, "gen", "partition", "--x", "a,b")[0] == 2


def test_solve_fixture(capsys):
    fixture = json.loads(FIXTURE.read_text())
    code, out, _ = run(capsys, "solve", "-i", str(FIXTURE))
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["wiener"] - fixture["oracle_value"]) <= 1e-9 * fixture["oracle_value"]
    ps = serialize.pointset_from_json(fixture)
    tree = serialize.tree_from_json(doc["tree"])
    assert crossing_pairs(tree, ps) == []
    assert wiener_pairwise(tree, ps) == pytest.approx(doc["wiener"], rel=1e-9)


def test_solve_tables(capsys):
    code, out, _ = run(capsys, "solve", "-i", str(FIXTURE), "--tables")
    tables = json.loads(out)["tables"]
    assert code == 0 and tables["n"] == 8
    assert tables["m_right"][3][1] is None
    assert tables["choice_left"][0][0] is None
    assert tables["m_left"][0][7] == pytest.approx(json.loads(out)["wiener"], rel=1e-12)


def test_solve_deterministic_bytes(capsys):
    _, a, _ = run(capsys, "solve", "-i", str(FIXTURE), "--tables")
    _, b, _ = run(capsys, "solve", "-i", str(FIXTURE), "--tables")
    assert a == b


def test_solve_rejects_collinear(capsys, tmp_path):
    path = write(tmp_path, "line.json", {"points": [[0, 0], [1, 0], [2, 0]]})
    code, out, err = run(capsys, "solve", "-i", path)
    assert code == 2 and out == "" and "point" in err


def test_malformed_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "solve", "-i", str(bad))[0] == 2
    assert run(capsys, "solve", "-i", write(tmp_path, "x.json", {"pts": []}))[0] == 2
    assert run(capsys, "solve", "-i", str(tmp_path / "missing.json"))[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--tolerance", "-1"])
    assert exc.value.code == 2


def test_wiener_command(capsys, tmp_path):
    pts = write(tmp_path, "p.json", {"points": [[0, 0], [1, 0], [2, 0]]})
    tree = write(tmp_path, "t.json", {"n": 3, "edges": [[0, 1], [1, 2]]})
    code, out, _ = run(capsys, "wiener", "-i", pts, "--tree", tree)
    doc = json.loads(out)
    assert code == 0 and doc["wiener"] == 4.0 and doc["wiener_pairwise"] == 4.0
    assert doc["difference"] == 0.0 and doc["weight"] == 2.0
    assert len(doc["per_edge_contribution"]) == 2
    embedded = write(
        tmp_path, "e.json", {"points": [[0, 0], [1, 0], [2, 0]], "tree": {"n": 3, "edges": [[0, 2], [1, 2]]}}
    )
    code, out, _ = run(capsys, "wiener", "-i", embedded)
    assert code == 0 and json.loads(out)["wiener"] == 6.0
    bad = write(tmp_path, "b.json", {"n": 3, "edges": [[0, 1], [0, 1]]})
    assert run(capsys, "wiener", "-i", pts, "--tree", bad)[0] == 2


def test_oracle_modes(capsys, tmp_path):
    fixture = json.loads(FIXTURE.read_text())
    code, out, _ = run(capsys, "oracle", "-i", str(FIXTURE))
    doc = json.loads(out)
    assert code == 0 and doc["value"] == fixture["oracle_value"] and doc["count"] == 8**6
    _, threaded, _ = run(capsys, "oracle", "-i", str(FIXTURE), "--threads", "4")
    assert threaded == out
    pts = write(tmp_path, "p.json", {"points": [[i, 0] for i in range(5)]})
    code, out, _ = run(capsys, "oracle", "-i", pts, "--mode", "path")
    assert code == 0 and json.loads(out)["value"] == 20.0
    code, out, _ = run(capsys, "oracle", "-i", pts, "--mode", "budgeted", "--budget", "4")
    assert code == 0 and json.loads(out)["value"] == 20.0


def test_oracle_limit_and_infeasible(capsys, tmp_path):
    big = write(tmp_path, "big.json", {"points": [[i, i * i] for i in range(10)]})
    code, out, err = run(capsys, "oracle", "-i", big)
    assert code == 3 and out == "" and "refused" in err
    pts = write(tmp_path, "p.json", {"points": [[i, 0] for i in range(5)]})
    code, out, _ = run(capsys, "oracle", "-i", pts, "--mode", "budgeted", "--budget", "3.5")
    assert code == 4 and json.loads(out) == {"infeasible": True, "budget": 3.5}
    assert run(capsys, "oracle", "-i", pts, "--mode", "budgeted")[0] == 2


def test_paths_command(capsys, tmp_path):
    code, out, _ = run(capsys, "paths", "--twelve-config", "1")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 12
    assert [r["wiener"] for r in rows] == sorted(r["wiener"] for r in rows)
    code, out, _ = run(capsys, "paths", "--sweep", "50")
    assert code == 0 and json.loads(out)[0]["threshold"] >= 1
    grid = write(tmp_path, "g.json", {"points": [[0, 0], [1, 0], [0, 1], [1, 1]]})
    svg = tmp_path / "best.svg"
    code, out, _ = run(capsys, "paths", "-i", grid, "--oracle", "--bound-check", "--svg", str(svg))
    rows = json.loads(out)
    assert code == 0 and rows[0]["value"] == 10.0 and rows[0]["planar"]
    assert rows[1]["ok"] and rows[1]["bound"] == 10
    assert svg.read_text().count("<circle") == 4
    assert run(capsys, "paths")[0] == 2


def test_render(capsys, tmp_path):
    pts = write(tmp_path, "sq.json", {"points": [[0, 0], [1, 0], [1, 1], [0, 1]]})
    crossing = write(tmp_path, "t.json", {"n": 4, "edges": [[0, 2], [1, 3], [0, 1]]})
    code, svg, _ = run(capsys, "render", "-i", pts, "--tree", crossing)
    assert code == 0 and "<svg" in svg
    assert svg.count("<circle") == 4
    assert len(re.findall(r'class="edge crossing"', svg)) == 2
    assert len(re.findall(r'class="edge"', svg)) == 1
    _, again, _ = run(capsys, "render", "-i", pts, "--tree", crossing)
    assert again == svg
    path = write(tmp_path, "path.json", {"order": [0, 1, 2, 3]})
    code, svg, _ = run(capsys, "render", "-i", pts, "--path", path)
    assert code == 0 and "crossing" not in svg
    wrong = write(tmp_path, "w.json", {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]})
    assert run(capsys, "render", "-i", pts, "--tree", wrong)[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "sol.json"
    code, out, _ = run(capsys, "solve", "-i", str(FIXTURE), "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["tree"]["n"] == 8


def test_json_round_trips():
    ps = PointSet.from_xy([(0.1, -2.5), (3, 4)], labels=["apex", "apex"])
    assert serialize.pointset_from_json(json.loads(serialize.dumps(serialize.pointset_to_json(ps)))) == ps
    t = SpanningTree(3, ((0, 1), (2, 1)))
    assert serialize.tree_from_json(json.loads(serialize.dumps(serialize.tree_to_json(t)))) == t
    p = HamiltonianPath((2, 0, 1))
    assert serialize.path_from_json(json.loads(serialize.dumps(serialize.path_to_json(p)))) == p


def test_dumps_refuses_nan():
    with pytest.raises(ValueError):
        serialize.dumps({"x": math.nan})

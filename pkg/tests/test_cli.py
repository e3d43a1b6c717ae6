import csv
import io
import json
from math import comb

import pytest

from conftest import k4_all, path3, star3
from evangelize import generate_instance, parse_graph, write_graph
from evangelize.bench import COLUMNS
from evangelize.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in (("path3", path3()), ("k4", k4_all(2, 2)), ("star", star3(center=(1, 1))),
                    ("gnp", generate_instance("random_gnp", {"n": 9, "p": 0.4}, 3))):
        out[name] = str(tmp_path / f"{name}.evg")
        write_graph(g, out[name])
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_simulate(files, capsys):
    code, out, err = run(capsys, "simulate", "--graph", files["path3"], "--seed", "0", "--trace")
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["n_influenced"] == 2 and rep["result"]["rounds"] == 1
    assert rep["result"]["trace"] == [{"evangelized": [], "influenced": [1]}]
    assert "|Inf|=2" in err


def test_solve_mes_auto_picks_tree(files, capsys):
    code, out, _ = run(capsys, "solve", "mes", "--graph", files["path3"], "--budget", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["solver"] == "tree" and rep["result"]["objective"] == 3
    assert rep["result"]["seed"] == [1]
    assert rep["instance"] == {"n": 3, "m": 2, "class": "forest", "t": 2}


def test_solve_pes_binary_search(files, capsys):
    code, out, _ = run(capsys, "solve", "pes", "--graph", files["k4"], "--solver", "binary-search")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["objective"] == 2
    assert rep["result"]["solver"] == "binary-search[clique]"


def test_solve_pes_dense(files, capsys):
    code, out, _ = run(capsys, "solve", "pes", "--graph", files["k4"], "--solver", "dense")
    assert code == 0 and json.loads(out)["result"]["objective"] == 2


def test_dense_precondition_exit(files, capsys):
    code, _, err = run(capsys, "solve", "pes", "--graph", files["path3"], "--solver", "dense",
                       "--tmax-e", "2", "--tmax-i", "2")
    assert code == 3 and "degree" in err


def test_tree_solver_on_cycle_exits_3(files, capsys):
    code, _, _ = run(capsys, "solve", "mes", "--graph", files["k4"], "--budget", "1",
                     "--solver", "tree")
    assert code == 3


def test_parse_error_exit(files, capsys):
    bad = files["dir"] / "bad.evg"
    bad.write_text("evg-graph v1\nn 2\nt 0 1 1\nt 1 1 1\ne 0 0\n")
    code, _, err = run(capsys, "simulate", "--graph", str(bad), "--seed", "0")
    assert code == 2 and "line 5" in err


def test_missing_file_exit(files, capsys):
    code, _, _ = run(capsys, "partition", "--graph", str(files["dir"] / "nope.evg"))
    assert code == 2


def test_work_guard_exit(files, capsys):
    code, _, err = run(capsys, "solve", "mes", "--graph", files["gnp"], "--budget", "4",
                       "--max-work", "2")
    assert code == 4 and "oracle" in err


def test_alpha_decision(files, capsys):
    code, out, _ = run(capsys, "solve", "mes", "--graph", files["star"], "--budget", "1",
                       "--alpha", "4", "--cover", "auto")
    rep = json.loads(out)["result"]
    assert code == 0 and rep["decision"] is True and rep["cover"] == [0]
    code, out, _ = run(capsys, "solve", "mes", "--graph", files["star"], "--budget", "0",
                       "--alpha", "1")
    assert json.loads(out)["result"]["decision"] is False


def test_partition(files, capsys):
    code, out, _ = run(capsys, "partition", "--graph", files["star"])
    rep = json.loads(out)["result"]
    assert code == 0 and rep["t"] == 2 and rep["classes"] == [[0], [1, 2, 3]]


def test_gadget(files, capsys, tmp_path):
    src = tmp_path / "im.evg"
    src.write_text("evg-graph v1\nn 2\nt 0 1 1\nt 1 1 1\ne 0 1\n")
    out_path = tmp_path / "gadget.evg"
    code, out, _ = run(capsys, "gadget", "im-to-mes", "--graph", str(src), "--out", str(out_path))
    assert code == 0 and json.loads(out)["result"]["n"] == 6
    assert parse_graph(out_path.read_text()).m == 5
    code, _, _ = run(capsys, "gadget", "im-to-mes", "--graph", files["path3"])
    assert code == 2  # t_I != t_E is not an IM instance


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "--kind", "tree", "--n", "10", "--rng-seed", "4")
    _, b, _ = run(capsys, "gen", "--kind", "tree", "--n", "10", "--rng-seed", "4")
    assert a == b and parse_graph(a).n == 10


def _schema(obj):
    if isinstance(obj, dict):
        return {k: _schema(v) for k, v in sorted(obj.items())}
    if isinstance(obj, list):
        return "list"
    return type(obj).__name__


GOLDEN = {
    "command": "str",
    "instance": {"class": "str", "m": "int", "n": "int", "t": "int"},
    "result": {"budget": "int", "explored": "int", "objective": "int", "seed": "list",
               "solver": "str"},
    "wall_time": "float",
    "work": {"explored": "int"},
}


@pytest.mark.parametrize("solver, graph", [("tree", "path3"), ("clique", "k4"), ("nd", "gnp"),
                                           ("oracle", "gnp"), ("auto", "star")])
def test_json_schema_stable(files, capsys, solver, graph):
    _, out, _ = run(capsys, "solve", "mes", "--graph", files[graph], "--budget", "2",
                    "--solver", solver)
    assert _schema(json.loads(out)) == GOLDEN


def test_cross_solver_agreement(files, capsys):
    # a star is a tree and has neighborhood diversity 2
    objs = set()
    for solver in ("tree", "nd", "oracle", "auto"):
        _, out, _ = run(capsys, "solve", "mes", "--graph", files["star"], "--budget", "1",
                        "--solver", solver)
        objs.add(json.loads(out)["result"]["objective"])
    assert objs == {4}


def test_bench_empty_sweep(capsys):
    code, out, _ = run(capsys, "bench", "--family", "tree")
    assert code == 0 and out.strip() == ",".join(COLUMNS)


def test_bench_tree_rows(capsys):
    code, out, _ = run(capsys, "bench", "--family", "tree", "--sizes", "20", "40", "60",
                       "--betas", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 3
    assert all(r["solver"] == "tree" and r["error"] == "" for r in rows)


def test_bench_nd_counts(capsys):
    code, out, _ = run(capsys, "bench", "--family", "bounded_nd", "--sizes", "30",
                       "--betas", "1", "2", "3", "--t", "3", "--p", "0.5")
    rows = list(csv.DictReader(io.StringIO(out)))
    for r in rows:
        if int(r["t"]) == 3:
            assert int(r["work"]) <= comb(int(r["beta"]) + 2, 2)

import json
import subprocess
import sys

import pytest

from degseq.cli import main
from degseq.core import ObjectiveSpec, degree_sequence, evaluate, parse_rational
from degseq.realize import eg_check


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def instance(tmp_path):
    def write(data):
        p = tmp_path / "inst.json"
        p.write_text(json.dumps(data))
        return str(p)
    return write


def test_check_graph(capsys):
    code, out = run(capsys, "check", "graph", "2,2,2")
    assert code == 0 and out["feasible"]
    edges = [tuple(e) for e in out["witness"]["edges"]]
    assert sorted(edges) == [(1, 2), (1, 3), (2, 3)]
    code, out = run(capsys, "check", "graph", "3,1")
    assert code == 2 and out == {"kind": "graph", "feasible": False}


def test_check_multi_and_hyper(capsys):
    assert run(capsys, "check", "multi", "2,2,2", "--k", "3", "--m", "2")[0] == 0
    assert run(capsys, "check", "multi", "3,2,1", "--k", "3", "--m", "2")[0] == 2
    assert run(capsys, "check", "hyper", "1,1,1,0", "--k", "3")[0] == 0
    code, out = run(capsys, "check", "multi", "1,1")
    assert code == 1 and out["status"] == "error"


def test_optimize_envelope_reverifies(capsys, instance):
    path = instance({"n": 5, "m": 4, "objective": {"kind": "identical", "tables": [[0, 3, -1, 4, "5/2"]]}})
    f = ObjectiveSpec.identical([0, 3, -1, 4, "5/2"])
    for alg in ("graph-dp", "multi-dp"):
        code, out = run(capsys, "optimize", alg, path)
        assert code == 0 and out["status"] == "ok"
        assert set(out) == {"status", "algorithm", "value", "degrees", "witness", "elapsed_ms"}
        assert parse_rational(out["value"]) == evaluate(f, out["degrees"])
        deg = [0] * 5
        for e in out["witness"]["edges"]:
            edge, mult = (e["edge"], e["multiplicity"]) if isinstance(e, dict) else (e, 1)
            for v in edge:
                deg[v - 1] += mult
        assert deg == out["degrees"]
    assert eg_check(out["degrees"]) or out["algorithm"] != "graph-dp"


def test_optimize_threshold_and_linear(capsys, instance):
    path = instance({"n": 4, "m": 3, "objective": {"kind": "squares"}})
    code, out = run(capsys, "optimize", "threshold-dp", path)
    assert code == 0 and out["value"] == "12" and out["degrees"] == [3, 1, 1, 1]
    path = instance({"n": 3, "k": 2, "m": 2, "objective": {"kind": "linear", "weights": [3, 2, 1]}})
    code, out = run(capsys, "optimize", "linear-hyper", path)
    assert code == 0 and out["value"] == "9"
    code, out = run(capsys, "optimize", "linear-multi", path)
    assert code == 0 and out["value"] == "10"


def test_optimize_errors(capsys, instance):
    path = instance({"n": 4, "m": 3, "objective": {"kind": "identical", "tables": [[0, 0, 1, 0]]}})
    code, out = run(capsys, "optimize", "threshold-dp", path)
    assert code == 1 and out["code"] == "NotConvex"
    path = instance({"n": 2, "m": 3, "objective": {"kind": "squares"}})
    code, out = run(capsys, "optimize", "graph-dp", path)
    assert code == 1 and out["code"] == "InfeasibleCount"
    code, out = run(capsys, "optimize", "graph-dp", "/nonexistent.json")
    assert code == 1 and out["status"] == "error"
    assert run(capsys, "optimize", "nope", path)[0] == 1


def test_reduce_and_lift(capsys):
    code, out = run(capsys, "reduce", "--a", "1,1,1", "--b", "3", "--lift", "4")
    assert code == 0
    assert out["d"] == [1, 1, 1] and out["lifted"] == [1, 1, 1, 1] and not out["degenerate"]


def test_polytope_commands(capsys):
    code, out = run(capsys, "polytope", "--n", "4", "--m", "3", "--verify-threshold")
    assert code == 0 and out["result"] == "equal"
    code, out = run(capsys, "polytope", "--n", "3", "--m", "1")
    assert out["vertices"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert run(capsys, "--max-n", "3", "polytope", "--n", "4", "--m", "1")[0] == 1


def test_oracle_commands(capsys, instance):
    assert run(capsys, "oracle", "--task", "decide", "--d", "3,1,1,1", "--k", "3")[0] == 2
    code, out = run(capsys, "oracle", "--task", "decide", "--d", "1,1,1", "--k", "3")
    assert code == 0 and out["witness"]["edges"] == [[1, 2, 3]]
    path = instance({"n": 4, "m": 3, "objective": {"kind": "squares"}})
    code, out = run(capsys, "oracle", "--task", "brute-opt", "--instance", path)
    assert code == 0 and out["value"] == "12"
    path = instance({"n": 2, "m": 3, "objective": {"kind": "squares"}})
    assert run(capsys, "oracle", "--task", "brute-opt", "--instance", path)[0] == 2


def test_output_is_deterministic(instance):
    path = instance({"n": 6, "m": 5, "objective": {"kind": "neg-squares-at", "d": [2, 2, 2, 1, 2, 1]}})
    outs = []
    for _ in range(2):
        p = subprocess.run([sys.executable, "-m", "degseq", "optimize", "multi-dp", path, "--mode", "enumerate"],
                           capture_output=True, text=True)
        assert p.returncode == 0, p.stderr
        data = json.loads(p.stdout)
        data.pop("elapsed_ms")
        outs.append(json.dumps(data, sort_keys=True))
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["degrees"] == [2, 2, 2, 1, 2, 1]

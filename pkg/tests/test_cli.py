import json

import pytest

from centralfiring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_a3_and_g2(capsys):
    code, out = run(capsys, "verify", "A3", "G2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["all_agree"]
    computed = {(r["type"], r["start"]): r["computed"] for r in data["rows"]}
    assert [computed[("A3", s)] for s in ("0", "w1", "w2", "w3")] == [True, True, False, True]
    assert [computed[("G2", s)] for s in ("0", "w1", "w2")] == [False, True, True]


def test_verify_is_deterministic_across_workers(capsys):
    _, one = run(capsys, "verify", "B3", "C3", "--format", "json")
    _, two = run(capsys, "verify", "B3", "C3", "--format", "json", "--threads", "2")
    assert one == two


def test_verify_needs_long_for_big_ranks(capsys):
    assert main(["verify", "D6"]) == 2
    code, out = run(capsys, "verify", "D6", "--long")
    assert code == 0 and "D6   0    predicted=F computed=F" in out


def test_verify_budget_rows_fail(capsys):
    code, out = run(capsys, "verify", "D4", "--budget", "5")
    assert code == 1 and "SKIP" in out


def test_stabilize(capsys):
    assert run(capsys, "stabilize", "A3", "--chips", "0,0,0,0") == (0, "2,1,-1,-2\n")
    code, out = run(capsys, "stabilize", "E7", "w6", "--mode", "unlabeled", "--format", "json")
    assert json.loads(out)["orbit"] == [1, 1, 1, 1, 1, 1, 2]
    code, out = run(capsys, "stabilize", "A2", "2,1")
    assert out.splitlines()[0] == "2,1"


def test_ucf(capsys):
    code, out = run(capsys, "ucf", "A3", "0", "--format", "json")
    moves = json.loads(out)["moves"]
    assert len({tuple(m["to"]) for m in moves} | {(0, 0, 0)}) == 7
    code, out = run(capsys, "ucf", "E7", "w6", "--script", "1,2,3,4,5;2,4,5,6,7")
    assert out.splitlines()[-1].endswith("0 1 0 0 0 0 1")
    code, out = run(capsys, "ucf", "A2", "1,1")
    assert out == "1,1\n"
    assert main(["ucf", "B2", "0"]) == 2


def test_span_connected_chips_fold(capsys):
    code, out = run(capsys, "span", "A2", "w1")
    assert out.startswith("dim 2")
    code, out = run(capsys, "connected", "A2", "0")
    assert out.startswith("True")
    code, out = run(capsys, "chips", "D5", "w4", "--format", "json")
    assert json.loads(out)["positions"] == [0.5, 0.5, 0.5, 0.5, -0.5]
    code, out = run(capsys, "fold", "D4", "(1 3 4)")
    assert out.startswith("D4 -> G2")


def test_export(tmp_path, capsys):
    p = tmp_path / "g.json"
    assert main(["export", "A2", "0", "-o", str(p)]) == 0
    first = p.read_bytes()
    assert main(["export", "A2", "0", "-o", str(p)]) == 0
    assert p.read_bytes() == first
    assert len(json.loads(first)["normal_forms"]) == 3
    q = tmp_path / "g.dot"
    assert main(["export", "A2", "0", "--graph-format", "dot", "-o", str(q)]) == 0
    assert q.read_text().startswith("digraph")
    assert main(["export", "A2", "0", "-o", str(tmp_path / "missing" / "x.json")]) == 3


def test_bad_weight_is_an_error(capsys):
    assert main(["span", "A2", "w7"]) == 2

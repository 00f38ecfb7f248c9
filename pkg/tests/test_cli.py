from __future__ import annotations

import json

import pytest

from hanoi4 import harness
from hanoi4.cli import main
from hanoi4.instance_io import classic_instance, emit_instance, load_instance, parse_plan
from hanoi4.core import validate_plan


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_solve_classic_writes_valid_plan(tmp_path, capsys):
    out = tmp_path / "plan.txt"
    assert main(["solve", "--classic", "30", "--out", str(out)]) == 0
    plan = parse_plan(out.read_text())
    inst = classic_instance(30)
    assert plan.length == 1025
    assert validate_plan(inst.start, inst.goal, plan) is None
    assert "status=solved len=1025" in capsys.readouterr().err


def test_solve_file_to_stdout(golden, capsys):
    assert main(["solve", str(golden / "mixed.lp"), "--heuristic", "exhaustive"]) == 0
    plan = parse_plan(capsys.readouterr().out)
    inst = load_instance(golden / "mixed.lp")
    assert validate_plan(inst.start, inst.goal, plan) is None


def test_parse_error_exit(tmp_path, capsys):
    path = write(tmp_path, "bad.lp", "step(1). time(0..1). disk(1..6). on0(5,1). on0(6,5). ongoal(5,2).")
    assert main(["solve", path]) == 2
    assert "parse-error" in capsys.readouterr().err


def test_unknown_exit(golden, capsys):
    assert main(["solve", str(golden / "rand_unknown.lp"), "--heuristic", "rand"]) == 3
    assert capsys.readouterr().out == ""
    assert main(["solve", str(golden / "rand_unknown.lp"), "--heuristic", "exhaustive"]) == 0


def test_over_bound_exit(tmp_path, capsys):
    inst = classic_instance(3)
    text = emit_instance(type(inst)(3, 4, inst.start, inst.goal))
    assert main(["solve", write(tmp_path, "tight.lp", text)]) == 4
    # the plan is still written, and it is valid
    plan = parse_plan(capsys.readouterr().out)
    assert plan.length == 5 and validate_plan(inst.start, inst.goal, plan) is None


def test_resource_limit_exit():
    assert main(["solve", "--classic", "20", "--heuristic", "exhaustive", "--memo-cap", "10"]) == 5


def test_usage_errors(capsys):
    assert main(["solve"]) == 1
    assert main(["bench", "--classic", "3..4", "--heuristic", "frame"]) == 1
    assert main(["bench", "--classic", "3..4", "--heuristic", ","]) == 1
    with pytest.raises(SystemExit):
        main(["bench", "--classic", "9..3"])


def test_verify_classic_output(capsys):
    assert main(["verify-classic", "--max-n", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "21 passed, 0 failed"
    assert lines[0] == "PASS n=1 heuristic=rand len=1 expected=1"


def test_verify_classic_failure_exit(monkeypatch, capsys):
    monkeypatch.setattr(harness, "fs_number", lambda n: -1)
    assert main(["verify-classic", "--max-n", "2"]) == 6
    assert "FAIL" in capsys.readouterr().out


def test_bench_csv_and_json(tmp_path, capsys):
    det = tmp_path / "details.json"
    args = ["bench", "--classic", "3..6", "--fs-style", "4", "--heuristic", "rand,exhaustive",
            "--heuristic", "stockmeyer", "--format", "json", "--details", str(det)]
    assert main(args) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["heuristic"] for r in rows] == ["rand", "exhaustive", "stockmeyer"]
    assert len(json.loads(det.read_text())) == 3 * 8
    assert main(["bench", "--classic", "3..5", "--heuristic", "rohl-gedeon"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("heuristic,error_bound,") and out[1].startswith("rohl-gedeon,2,")


def test_random_command(tmp_path, capsys):
    emit = tmp_path / "inst"
    assert main(["random", "--count", "3", "--n-range", "6..8", "--bfs-cap", "8",
                 "--emit-dir", str(emit)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4 and lines[0].startswith("index,name,n,")
    assert len(list(emit.glob("*.lp"))) == 3


def test_oracle_table_and_instance(golden, tmp_path, capsys):
    assert main(["oracle", "--max-n", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n,fs_number,argmins" and out[-1] == "5,13,2 3"
    plan_path = tmp_path / "w.plan"
    assert main(["oracle", str(golden / "classic3.lp"), "--out", str(plan_path)]) == 0
    assert capsys.readouterr().out.strip() == "bfs_optimal=5"
    assert parse_plan(plan_path.read_text()).length == 5
    assert main(["oracle", str(golden / "rand_unknown.lp"), "--bfs-cap", "10"]) == 5

from __future__ import annotations

from dataclasses import asdict

import pytest

from hanoi4.core import validate_plan
from hanoi4.harness import (
    TIMING_COLUMNS,
    BenchmarkRow,
    RunConfig,
    format_rows,
    fs_style_instance,
    fs_style_instances,
    random_experiment,
    random_instances,
    run_bench,
    verify_classic,
)
from hanoi4.instance_io import classic_instance
from hanoi4.oracle import bfs_optimal
from hanoi4.partitions import GUIDED, Heuristic

SAMPLE = BenchmarkRow("rohl-gedeon", 2, 0.5, 1.25, 10.0, 12, 960.0, 3, 1, 0, 0)


def strip_timing(rows):
    return [{k: v for k, v in asdict(r).items() if k not in TIMING_COLUMNS and k != "seconds"} for r in rows]


def test_report_golden_csv(golden):
    assert format_rows([SAMPLE], "csv") == (golden / "report.csv").read_text()


def test_report_golden_json(golden):
    assert format_rows([SAMPLE], "json") == (golden / "report.json").read_text()


def test_unknown_report_format():
    with pytest.raises(ValueError):
        format_rows([SAMPLE], "xml")


def test_empty_config_rejected():
    with pytest.raises(ValueError, match="heuristic"):
        RunConfig([classic_instance(3)], [])
    with pytest.raises(ValueError, match="instances"):
        RunConfig([], [Heuristic.RAND])


def test_bench_deterministic():
    insts = fs_style_instances(8, (3, 9), 1) + random_instances(6, (3, 9), 2)
    cfg = RunConfig(insts, list(Heuristic))
    a_rows, a_det = run_bench(cfg)
    b_rows, b_det = run_bench(cfg)
    assert strip_timing(a_rows) == strip_timing(b_rows)
    assert strip_timing(a_det) == strip_timing(b_det)
    assert len(a_rows) == 7 and len(a_det) == 7 * len(insts)
    for row in a_rows:
        total = row.solved_count + row.unknown_count + row.over_bound_count + row.resource_limit_count
        assert total == len(insts)


def test_bench_parallel_matches_serial():
    insts = fs_style_instances(6, (4, 8), 3)
    serial = run_bench(RunConfig(insts, [Heuristic.RAND, Heuristic.EXHAUSTIVE]))
    parallel = run_bench(RunConfig(insts, [Heuristic.RAND, Heuristic.EXHAUSTIVE], jobs=2))
    assert strip_timing(serial[1]) == strip_timing(parallel[1])


def test_fs_style_instance_properties():
    for seed in range(40):
        inst = fs_style_instance(2 + seed % 6, seed)
        assert inst == fs_style_instance(2 + seed % 6, seed)
        assert bfs_optimal(inst.start, inst.goal)[0] <= inst.max_steps


def test_verify_classic_line_counts():
    lines = verify_classic(1)
    assert sum(1 for x in lines if "heuristic=" in x.check) == 6
    assert sum(1 for x in lines if x.check == "bfs") == 1
    assert all(x.ok for x in lines)
    assert str(lines[0]) == "PASS n=1 heuristic=rand len=1 expected=1"


def test_verify_classic_range():
    with pytest.raises(ValueError):
        verify_classic(31)


def test_random_experiment_deterministic_and_ordered():
    a = random_experiment(6, (6, 9), 11, bfs_cap=8)
    b = random_experiment(6, (6, 9), 11, bfs_cap=8)
    assert a == b
    for row in a:
        assert row.exhaustive_status == "solved"
        if row.guided_length is not None:
            assert row.guided_length >= row.exhaustive_length
        if row.bfs_length is not None:
            assert row.bfs_length <= row.exhaustive_length


def test_bench_plans_are_valid():
    # run_bench raises on any invalid plan; also check a few directly
    from hanoi4.plan4 import solve_with_bound

    for inst in random_instances(10, (2, 10), 5):
        for h in GUIDED:
            out = solve_with_bound(inst, h)
            if out.plan is not None:
                assert validate_plan(inst.start, inst.goal, out.plan) is None

"""Benchmark sweeps, classic-problem verification and the random-configuration experiment."""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterable, Sequence

from .core import PEGS, apply_move, full_tower, validate_plan
from .instance_io import Instance, classic_instance, random_instance
from .oracle import DEFAULT_CAP, bfs_optimal, fs_number
from .partitions import GUIDED, Heuristic
from .plan4 import Status, plan4_solve, solve_with_bound


@dataclass
class BenchmarkRow:
    heuristic: str
    error_bound: int
    avg_seconds: float
    max_seconds: float
    avg_memo_entries: float
    max_memo_entries: int
    avg_memo_bytes: float
    solved_count: int
    unknown_count: int
    over_bound_count: int
    resource_limit_count: int


# timing columns are machine dependent and excluded from determinism checks
TIMING_COLUMNS = ("avg_seconds", "max_seconds")


@dataclass
class InstanceResult:
    name: str
    heuristic: str
    status: str
    length: int | None
    memo_entries: int
    memo_bytes: int
    seconds: float


@dataclass
class RunConfig:
    instances: list[Instance]
    heuristics: list[Heuristic]
    error_bound: int = 2
    memo_cap: int | None = None
    timeout: float | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if not self.instances:
            raise ValueError("no instances to run")
        if not self.heuristics:
            raise ValueError("no heuristics given")


def fs_style_instance(n: int, seed: int) -> Instance:
    """Two states taken from a classic Frame-Stewart solution trace.

    The trace runs a full tower between two random pegs; start and goal are
    the states at two random positions ``i < j``, so partly built sub-towers
    appear the way they do in competition-style instances. The step bound is
    the trace distance ``j - i``.
    """
    rng = random.Random(seed)
    src, dst = rng.sample(PEGS, 2)
    out = plan4_solve(full_tower(n, src), full_tower(n, dst), Heuristic.ROHL_GEDEON, 0)
    assert out.plan is not None
    states = [full_tower(n, src)]
    for m in out.plan.moves:
        states.append(apply_move(states[-1], m))
    if len(states) < 2:
        return Instance(n, 0, states[0], states[0], f"fs-n{n}-s{seed}")
    i, j = sorted(rng.sample(range(len(states)), 2))
    return Instance(n, j - i, states[i], states[j], f"fs-n{n}-s{seed}")


def random_instances(count: int, n_range: tuple[int, int], seed: int,
                     steps_margin: Fraction | str | int = 2) -> list[Instance]:
    """``count`` uniform random instances with disk counts drawn from ``n_range``."""
    rng = random.Random(seed)
    lo, hi = n_range
    return [random_instance(rng.randint(lo, hi), rng.randrange(2 ** 32), steps_margin)
            for _ in range(count)]


def fs_style_instances(count: int, n_range: tuple[int, int], seed: int) -> list[Instance]:
    rng = random.Random(seed)
    lo, hi = n_range
    return [fs_style_instance(rng.randint(lo, hi), rng.randrange(2 ** 32)) for _ in range(count)]


def _solve_one(args: tuple[Instance, Heuristic, int, int | None, float | None]) -> InstanceResult:
    inst, h, bound, cap, timeout = args
    out = solve_with_bound(inst, h, bound, memo_cap=cap, timeout=timeout)
    if out.plan is not None and validate_plan(inst.start, inst.goal, out.plan) is not None:
        raise RuntimeError(f"{inst.source_name}: solver produced an invalid plan")
    return InstanceResult(
        inst.source_name, h.value, out.status.value, out.length,
        out.stats.entries, out.stats.approx_bytes, out.seconds,
    )


def _summarise(h: Heuristic, bound: int, results: Sequence[InstanceResult]) -> BenchmarkRow:
    k = len(results)
    counts = {s.value: 0 for s in Status}
    for r in results:
        counts[r.status] += 1
    return BenchmarkRow(
        heuristic=h.value,
        error_bound=bound,
        avg_seconds=sum(r.seconds for r in results) / k,
        max_seconds=max(r.seconds for r in results),
        avg_memo_entries=sum(r.memo_entries for r in results) / k,
        max_memo_entries=max(r.memo_entries for r in results),
        avg_memo_bytes=sum(r.memo_bytes for r in results) / k,
        solved_count=counts["solved"],
        unknown_count=counts["unknown"],
        over_bound_count=counts["over-bound"],
        resource_limit_count=counts["resource-limit"],
    )


def run_bench(cfg: RunConfig) -> tuple[list[BenchmarkRow], list[InstanceResult]]:
    """Solve every instance under every heuristic, each with fresh tables."""
    rows, details = [], []
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        for h in cfg.heuristics:
            work = [(inst, h, cfg.error_bound, cfg.memo_cap, cfg.timeout) for inst in cfg.instances]
            results = list(pool.map(_solve_one, work) if pool else map(_solve_one, work))
            rows.append(_summarise(h, cfg.error_bound, results))
            details.extend(results)
    finally:
        if pool is not None:
            pool.shutdown()
    return rows, details


def format_rows(rows: Iterable[object], fmt: str) -> str:
    rows = list(rows)
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"  # type: ignore[call-overload]
    if fmt != "csv":
        raise ValueError(f"unknown report format {fmt!r}")
    buf = io.StringIO()
    if rows:
        names = [f.name for f in fields(rows[0])]  # type: ignore[arg-type]
        w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(asdict(r))  # type: ignore[call-overload]
    return buf.getvalue()


@dataclass
class CheckLine:
    ok: bool
    n: int
    check: str
    length: int | None
    expected: int

    def __str__(self) -> str:
        got = "-" if self.length is None else self.length
        return f"{'PASS' if self.ok else 'FAIL'} n={self.n} {self.check} len={got} expected={self.expected}"


def verify_classic(max_n: int, bfs_cap: int = DEFAULT_CAP,
                   heuristics: Sequence[Heuristic] = GUIDED) -> list[CheckLine]:
    """Every guided heuristic at error bound 0 against the Frame-Stewart count, plus BFS for small n."""
    if not 1 <= max_n <= 30:
        raise ValueError("max_n must be in 1..30")
    lines = []
    for n in range(1, max_n + 1):
        inst = classic_instance(n)
        want = fs_number(n)
        for h in heuristics:
            out = plan4_solve(inst.start, inst.goal, h, 0)
            ok = (
                out.status is Status.SOLVED
                and out.length == want
                and validate_plan(inst.start, inst.goal, out.plan) is None  # type: ignore[arg-type]
            )
            lines.append(CheckLine(ok, n, f"heuristic={h.value}", out.length, want))
    for n in range(1, min(max_n, bfs_cap) + 1):
        inst = classic_instance(n)
        got, witness = bfs_optimal(inst.start, inst.goal, bfs_cap)
        ok = got == fs_number(n) and validate_plan(inst.start, inst.goal, witness) is None
        lines.append(CheckLine(ok, n, "bfs", got, fs_number(n)))
    return lines


@dataclass
class ExperimentRow:
    index: int
    name: str
    n: int
    guided_status: str
    guided_length: int | None
    exhaustive_status: str
    exhaustive_length: int | None
    agree: bool | None
    bfs_length: int | None


def random_experiment(
    count: int,
    n_range: tuple[int, int],
    seed: int,
    guide: Heuristic = Heuristic.ROHL_GEDEON,
    guide_bound: int = 2,
    memo_cap: int | None = None,
    timeout: float | None = None,
    bfs_cap: int = 0,
) -> list[ExperimentRow]:
    """A guided heuristic against the exhaustive search on seeded random configurations.

    ``bfs_cap`` > 0 adds the BFS optimum for instances with at most that many disks.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rows = []
    for i, inst in enumerate(random_instances(count, n_range, seed)):
        g = solve_with_bound(inst, guide, guide_bound, memo_cap=memo_cap, timeout=timeout)
        e = solve_with_bound(inst, Heuristic.EXHAUSTIVE, 0, memo_cap=memo_cap, timeout=timeout)
        both = g.length is not None and e.length is not None
        bfs = None
        if inst.n_disks <= bfs_cap:
            bfs = bfs_optimal(inst.start, inst.goal, bfs_cap)[0]
        rows.append(ExperimentRow(
            i, inst.source_name, inst.n_disks,
            g.status.value, g.length, e.status.value, e.length,
            (g.length == e.length) if both else None, bfs,
        ))
    return rows

"""Memoized 4-peg Frame-Stewart solver for arbitrary start and goal configurations.

Each subproblem with its largest disk out of place is split into three steps:
gather the ``mid`` smallest disks into a tower on a spare peg, move the
remaining disks with the 3-peg solver around that peg, then spread the
tower onto its goal positions. The table keeps, per subproblem, the shortest
total over every admissible ``(mid, peg)`` choice.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .core import (
    Configuration,
    Move,
    Plan,
    bottom_peg,
    full_tower,
    restrict_large,
    restrict_small,
    strip_in_place,
    validate_configuration,
    validate_plan,
)
from .memo import Limits, MemoStats, MemoTable, ResourceLimitError
from .partitions import DEFAULT_ERROR_BOUND, Heuristic, candidate_mids
from .plan3 import Plan3Solver, spare_pegs

if TYPE_CHECKING:
    from .instance_io import Instance


class InputError(ValueError):
    """The start and goal do not describe the same well-formed set of disks."""


class Status(enum.Enum):
    SOLVED = "solved"
    UNKNOWN = "unknown"
    OVER_BOUND = "over-bound"
    RESOURCE_LIMIT = "resource-limit"

    def __str__(self) -> str:
        return self.value


@dataclass
class SolveOutcome:
    status: Status
    plan: Plan | None = None
    stats: MemoStats = field(default_factory=MemoStats)
    seconds: float = 0.0
    detail: str = ""

    @property
    def length(self) -> int | None:
        return None if self.plan is None else self.plan.length


def partition_candidates(
    n: int,
    cur: Configuration,
    goal: Configuration,
    heuristic: Heuristic,
    error_bound: int = DEFAULT_ERROR_BOUND,
) -> list[tuple[int, int, Configuration]]:
    """Admissible ``(mid, peg, intermediate)`` splits, mid ascending then peg ascending.

    A spare peg can host the sub-tower only if every disk it holds, in both
    the current and the goal configuration, is no larger than ``mid``.
    """
    pegs = spare_pegs(bottom_peg(cur, n), bottom_peg(goal, n))
    # largest disk on each spare peg across cur and goal; 0 when empty in both
    floor = {}
    for p in pegs:
        c, g = cur.stack(p), goal.stack(p)
        floor[p] = max(c[0] if c else 0, g[0] if g else 0)
    out = []
    for mid in candidate_mids(heuristic, n, error_bound):
        for p in pegs:
            if floor[p] <= mid:
                out.append((mid, p, full_tower(mid, p)))
    return out


class Plan4Solver:
    """One solve's worth of state: both answer tables plus the resource limits."""

    def __init__(
        self,
        heuristic: Heuristic = Heuristic.ROHL_GEDEON,
        error_bound: int = DEFAULT_ERROR_BOUND,
        memo_cap: int | None = None,
        timeout: float | None = None,
    ):
        self.heuristic = heuristic
        self.error_bound = error_bound
        self.memo = MemoTable()
        self.limits = Limits(memo_cap, timeout)
        self.plan3 = Plan3Solver(MemoTable(), self.limits, self.entry_count)

    def entry_count(self) -> int:
        return len(self.memo) + len(self.plan3.memo)

    def stats(self) -> MemoStats:
        a, b = self.memo.stats(), self.plan3.memo.stats()
        return MemoStats(a.entries + b.entries, a.hits + b.hits, a.misses + b.misses,
                         a.approx_bytes + b.approx_bytes)

    def length(self, n: int, cur: Configuration, goal: Configuration) -> int | None:
        """Shortest decomposition length, or ``None`` when no split is admissible."""
        n, cur, goal = strip_in_place(n, cur, goal)
        if n == 0:
            return 0
        if n == 1:
            return 1
        key = (n, cur.pegs, goal.pegs)
        hit = self.memo.lookup(key)
        if hit is not None:
            return hit[0]
        self.limits.check(self.entry_count())
        best: int | None = None
        choice = None
        for mid, peg, tower in partition_candidates(n, cur, goal, self.heuristic, self.error_bound):
            first = self.length(mid, restrict_small(cur, mid), tower)
            if first is None:
                continue
            last = self.length(mid, tower, restrict_small(goal, mid))
            if last is None:
                continue
            middle = self.plan3.length(
                n - mid, restrict_large(cur, mid, n), restrict_large(goal, mid, n), peg
            )
            total = first + middle + last
            if best is None or total < best:
                best, choice = total, (mid, peg)
        self.memo.record(key, best, choice)
        return best

    def moves(self, n: int, cur: Configuration, goal: Configuration,
              cache: dict | None = None) -> tuple[Move, ...]:
        """Rebuild the plan by re-descending the recorded choices."""
        if cache is None:
            cache = {}
        n, cur, goal = strip_in_place(n, cur, goal)
        if n == 0:
            return ()
        if n == 1:
            return ((bottom_peg(cur, 1), bottom_peg(goal, 1)),)
        key = (n, cur.pegs, goal.pegs)
        got = cache.get(key)
        if got is not None:
            return got
        entry = self.memo.peek(key)
        if entry is None:
            self.length(n, cur, goal)
            entry = self.memo.peek(key)
        length, choice = entry  # type: ignore[misc]
        if length is None:
            raise ValueError("subproblem has no admissible decomposition")
        mid, peg = choice
        tower = full_tower(mid, peg)
        out = (
            self.moves(mid, restrict_small(cur, mid), tower, cache)
            + self.plan3.moves(n - mid, restrict_large(cur, mid, n), restrict_large(goal, mid, n), peg)
            + self.moves(mid, tower, restrict_small(goal, mid), cache)
        )
        cache[key] = out
        return out

    def solve(self, cur: Configuration, goal: Configuration) -> SolveOutcome:
        check_pair(cur, goal)
        t0 = time.perf_counter()
        n = cur.n
        try:
            length = self.length(n, cur, goal)
            plan = None if length is None else Plan(self.moves(n, cur, goal))
        except ResourceLimitError as exc:
            return SolveOutcome(Status.RESOURCE_LIMIT, None, self.stats(),
                                time.perf_counter() - t0, str(exc))
        elapsed = time.perf_counter() - t0
        if plan is None:
            return SolveOutcome(Status.UNKNOWN, None, self.stats(), elapsed)
        return SolveOutcome(Status.SOLVED, plan, self.stats(), elapsed)


def check_pair(cur: Configuration, goal: Configuration) -> None:
    for name, cfg in (("start", cur), ("goal", goal)):
        v = validate_configuration(cfg)
        if v is not None:
            raise InputError(f"{name}: {v.message}")
    if cur.n != goal.n:
        raise InputError(f"start has {cur.n} disks, goal has {goal.n}")


def plan4_solve(
    cur: Configuration,
    goal: Configuration,
    heuristic: Heuristic = Heuristic.ROHL_GEDEON,
    error_bound: int = DEFAULT_ERROR_BOUND,
    *,
    memo_cap: int | None = None,
    timeout: float | None = None,
) -> SolveOutcome:
    return Plan4Solver(heuristic, error_bound, memo_cap, timeout).solve(cur, goal)


def solve_with_bound(
    instance: Instance,
    heuristic: Heuristic = Heuristic.ROHL_GEDEON,
    error_bound: int = DEFAULT_ERROR_BOUND,
    *,
    memo_cap: int | None = None,
    timeout: float | None = None,
) -> SolveOutcome:
    """Solve an instance; a plan longer than ``instance.max_steps`` is reported OVER_BOUND."""
    out = plan4_solve(instance.start, instance.goal, heuristic, error_bound,
                      memo_cap=memo_cap, timeout=timeout)
    if out.status is Status.SOLVED:
        failure = validate_plan(instance.start, instance.goal, out.plan)  # type: ignore[arg-type]
        if failure is not None:
            raise RuntimeError(f"solver produced an invalid plan: {failure.message}")
        if out.plan.length > instance.max_steps:  # type: ignore[union-attr]
            out.status = Status.OVER_BOUND
    return out

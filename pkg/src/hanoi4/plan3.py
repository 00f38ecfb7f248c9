"""Deterministic 3-peg configuration solver that keeps one peg untouched."""

from __future__ import annotations

from .core import (
    PEGS,
    Configuration,
    Move,
    Plan,
    bottom_peg,
    full_tower,
    restrict_small,
    strip_in_place,
)
from .memo import Limits, MemoTable


def spare_pegs(p1: int, p2: int) -> tuple[int, int]:
    a, b = (p for p in PEGS if p != p1 and p != p2)
    return a, b


def temp_peg(p1: int, p2: int, unused: int) -> int:
    """Peg that parks the smaller disks while the largest moves p1 -> p2."""
    a, b = spare_pegs(p1, p2)
    return b if unused == a else a


class Plan3Solver:
    def __init__(self, memo: MemoTable | None = None, limits: Limits | None = None,
                 shared_count=None):
        self.memo = memo if memo is not None else MemoTable()
        self.limits = limits
        # callable giving the combined entry count when tables share a cap
        self._count = shared_count or (lambda: len(self.memo))

    def length(self, n: int, cur: Configuration, goal: Configuration, unused: int) -> int:
        n, cur, goal = strip_in_place(n, cur, goal)
        if n == 0:
            return 0
        if n == 1:
            return 1
        key = (n, cur.pegs, goal.pegs, unused)
        hit = self.memo.lookup(key)
        if hit is not None:
            return hit[0]  # type: ignore[return-value]
        if self.limits is not None:
            self.limits.check(self._count())
        p1, p2 = bottom_peg(cur, n), bottom_peg(goal, n)
        tmp = temp_peg(p1, p2, unused)
        tower = full_tower(n - 1, tmp)
        total = (
            self.length(n - 1, restrict_small(cur, n - 1), tower, unused)
            + 1
            + self.length(n - 1, tower, restrict_small(goal, n - 1), unused)
        )
        self.memo.record(key, total, tmp)
        return total

    def moves(self, n: int, cur: Configuration, goal: Configuration, unused: int,
              cache: dict | None = None) -> tuple[Move, ...]:
        """Rebuild the move sequence; ``cache`` holds sub-plans for this rebuild only."""
        if cache is None:
            cache = {}
        n, cur, goal = strip_in_place(n, cur, goal)
        if n == 0:
            return ()
        p1, p2 = bottom_peg(cur, n), bottom_peg(goal, n)
        if n == 1:
            return ((p1, p2),)
        key = (n, cur.pegs, goal.pegs, unused)
        got = cache.get(key)
        if got is not None:
            return got
        tmp = temp_peg(p1, p2, unused)
        tower = full_tower(n - 1, tmp)
        out = (
            self.moves(n - 1, restrict_small(cur, n - 1), tower, unused, cache)
            + ((p1, p2),)
            + self.moves(n - 1, tower, restrict_small(goal, n - 1), unused, cache)
        )
        cache[key] = out
        return out


def plan3_solve(cur: Configuration, goal: Configuration, unused: int,
                memo: MemoTable | None = None) -> Plan:
    """Solve ``cur -> goal`` on the three pegs other than ``unused``.

    The largest misplaced disk always moves exactly once: the smaller disks
    are first gathered into a tower on the one free peg.
    """
    if unused not in PEGS:
        raise ValueError(f"unknown peg {unused}")
    if cur.stack(unused) or goal.stack(unused):
        raise ValueError(f"peg {unused} must stay empty")
    if cur.disks() != goal.disks():
        raise ValueError("current and goal configurations hold different disks")
    n = cur.n
    if cur.disks() != list(range(1, n + 1)):
        raise ValueError("disks must be numbered 1..n")
    solver = Plan3Solver(memo)
    solver.length(n, cur, goal, unused)
    return Plan(solver.moves(n, cur, goal, unused))

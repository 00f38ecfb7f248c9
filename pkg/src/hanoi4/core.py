"""State model for the 4-peg puzzle.

Disks are positive integers where 1 is the smallest. Pegs are numbered 1..4.
Each peg is stored as a tuple listing its disks bottom-to-top, so a legal
stack is strictly decreasing and the top disk is ``stack[-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

PEGS = (1, 2, 3, 4)

Move = tuple[int, int]
Stacks = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]


class IllegalMoveError(ValueError):
    """Raised by :func:`apply_move` when a move breaks the puzzle rules."""

    def __init__(self, move: Move, reason: str):
        super().__init__(f"illegal move {move[0]}->{move[1]}: {reason}")
        self.move = move
        self.reason = reason


@dataclass(frozen=True, slots=True)
class Configuration:
    pegs: Stacks

    @classmethod
    def from_pegs(cls, pegs: Mapping[int, Sequence[int]] | None = None) -> Configuration:
        """Build from a ``{peg: [bottom, ..., top]}`` mapping; missing pegs are empty."""
        pegs = pegs or {}
        bad = set(pegs) - set(PEGS)
        if bad:
            raise ValueError(f"unknown peg id(s): {sorted(bad)}")
        return cls(tuple(tuple(pegs.get(p, ())) for p in PEGS))  # type: ignore[arg-type]

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> Configuration:
        """Build from ``assignment[d-1] = peg of disk d``; stacking order is forced."""
        stacks: list[list[int]] = [[], [], [], []]
        for disk in range(len(assignment), 0, -1):
            stacks[assignment[disk - 1] - 1].append(disk)
        return cls(tuple(tuple(s) for s in stacks))  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        return sum(len(s) for s in self.pegs)

    def stack(self, peg: int) -> tuple[int, ...]:
        return self.pegs[peg - 1]

    def top(self, peg: int) -> int | None:
        s = self.pegs[peg - 1]
        return s[-1] if s else None

    def disks(self) -> list[int]:
        return sorted(d for s in self.pegs for d in s)

    def peg_of(self, disk: int) -> int:
        for i, s in enumerate(self.pegs):
            if disk in s:
                return i + 1
        raise KeyError(disk)

    def assignment(self) -> list[int]:
        """Peg of each disk 1..n, the inverse of :meth:`from_assignment`."""
        out = [0] * self.n
        for i, s in enumerate(self.pegs):
            for d in s:
                out[d - 1] = i + 1
        return out

    def relabel(self, perm: Mapping[int, int]) -> Configuration:
        """Move the contents of each peg ``p`` onto peg ``perm[p]``."""
        stacks: list[tuple[int, ...]] = [(), (), (), ()]
        for p in PEGS:
            stacks[perm[p] - 1] = self.pegs[p - 1]
        return Configuration(tuple(stacks))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return "\n".join(
            f"peg{p}: {' '.join(map(str, s))}".rstrip() for p, s in zip(PEGS, self.pegs)
        )


@dataclass(frozen=True)
class Plan:
    moves: tuple[Move, ...] = ()

    @property
    def length(self) -> int:
        return len(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __add__(self, other: Plan) -> Plan:
        return Plan(self.moves + other.moves)


@dataclass(frozen=True)
class Violation:
    kind: str  # "duplicate" | "missing" | "ordering" | "bad-disk"
    peg: int | None
    disk: int | None
    message: str


@dataclass(frozen=True)
class PlanFailure:
    kind: str  # "illegal-move" | "goal-mismatch"
    index: int | None
    message: str


def validate_configuration(cfg: Configuration, n: int | None = None) -> Violation | None:
    """Return the first rule violation in ``cfg``, or ``None`` if it is well formed.

    Duplicates are reported before ordering problems, and missing disks last.
    ``n`` defaults to the number of disks present.
    """
    if len(cfg.pegs) != 4:
        return Violation("bad-disk", None, None, f"expected 4 pegs, got {len(cfg.pegs)}")
    expected = cfg.n if n is None else n
    seen: dict[int, int] = {}
    for peg, stack in zip(PEGS, cfg.pegs):
        for d in stack:
            if not isinstance(d, int) or d < 1:
                return Violation("bad-disk", peg, d, f"peg {peg}: invalid disk {d!r}")
            if d in seen:
                return Violation(
                    "duplicate", peg, d, f"disk {d} on peg {peg} already on peg {seen[d]}"
                )
            seen[d] = peg
    for peg, stack in zip(PEGS, cfg.pegs):
        for below, above in zip(stack, stack[1:]):
            if above >= below:
                return Violation(
                    "ordering", peg, above, f"peg {peg}: disk {above} sits on disk {below}"
                )
    for d in range(1, expected + 1):
        if d not in seen:
            return Violation("missing", None, d, f"disk {d} is missing")
    extra = sorted(d for d in seen if d > expected)
    if extra:
        return Violation("bad-disk", seen[extra[0]], extra[0], f"disk {extra[0]} exceeds n={expected}")
    return None


def apply_move(cfg: Configuration, move: Move) -> Configuration:
    src, dst = move
    if src not in PEGS or dst not in PEGS:
        raise IllegalMoveError(move, "unknown peg")
    if src == dst:
        raise IllegalMoveError(move, "source equals destination")
    from_stack = cfg.pegs[src - 1]
    if not from_stack:
        raise IllegalMoveError(move, f"peg {src} is empty")
    disk = from_stack[-1]
    to_stack = cfg.pegs[dst - 1]
    if to_stack and to_stack[-1] < disk:
        raise IllegalMoveError(move, f"disk {disk} onto smaller disk {to_stack[-1]}")
    stacks = list(cfg.pegs)
    stacks[src - 1] = from_stack[:-1]
    stacks[dst - 1] = to_stack + (disk,)
    return Configuration(tuple(stacks))  # type: ignore[arg-type]


def replay(start: Configuration, moves: Iterable[Move]) -> Configuration:
    cfg = start
    for m in moves:
        cfg = apply_move(cfg, m)
    return cfg


def validate_plan(
    start: Configuration, goal: Configuration, plan: Plan | Sequence[Move]
) -> PlanFailure | None:
    """Replay a plan from ``start``; ``None`` means it legally reaches ``goal``."""
    moves = plan.moves if isinstance(plan, Plan) else plan
    cfg = start
    for i, m in enumerate(moves):
        try:
            cfg = apply_move(cfg, tuple(m))  # type: ignore[arg-type]
        except IllegalMoveError as exc:
            return PlanFailure("illegal-move", i, str(exc))
    if cfg != goal:
        return PlanFailure("goal-mismatch", None, "final state differs from goal")
    return None


def strip_in_place(
    n: int, cur: Configuration, goal: Configuration
) -> tuple[int, Configuration, Configuration]:
    """Drop the largest disks while they already sit at the bottom of their goal peg."""
    cp, gp = list(cur.pegs), list(goal.pegs)
    while n > 0:
        for i in range(4):
            if cp[i] and cp[i][0] == n:
                break
        else:
            raise ValueError(f"disk {n} is not at the bottom of any peg")
        if not (gp[i] and gp[i][0] == n):
            break
        cp[i] = cp[i][1:]
        gp[i] = gp[i][1:]
        n -= 1
    if n == cur.n and cp == list(cur.pegs):
        return n, cur, goal
    return n, Configuration(tuple(cp)), Configuration(tuple(gp))  # type: ignore[arg-type]


def restrict_small(cfg: Configuration, mid: int) -> Configuration:
    """Keep disks 1..mid. Stacks are decreasing, so each kept part is a suffix."""
    stacks = []
    for s in cfg.pegs:
        i = 0
        while i < len(s) and s[i] > mid:
            i += 1
        stacks.append(s[i:])
    return Configuration(tuple(stacks))  # type: ignore[arg-type]


def restrict_large(cfg: Configuration, mid: int, n: int) -> Configuration:
    """Keep disks mid+1..n renumbered to 1..n-mid, preserving relative order."""
    if mid == 0:
        return cfg
    stacks = []
    for s in cfg.pegs:
        stacks.append(tuple(d - mid for d in s if d > mid))
    return Configuration(tuple(stacks))  # type: ignore[arg-type]


def bottom_peg(cfg: Configuration, disk: int) -> int:
    for i, s in enumerate(cfg.pegs):
        if s and s[0] == disk:
            return i + 1
    raise ValueError(f"disk {disk} is not the bottom disk of any peg")


def full_tower(m: int, peg: int) -> Configuration:
    stacks: list[tuple[int, ...]] = [(), (), (), ()]
    stacks[peg - 1] = tuple(range(m, 0, -1))
    return Configuration(tuple(stacks))  # type: ignore[arg-type]

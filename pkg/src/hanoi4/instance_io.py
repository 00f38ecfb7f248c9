"""Reading and writing instance files and plan files.

Instance files are lists of facts in the competition vocabulary::

    step(N).            maximum number of moves
    time(T).            T = 0..N
    disk(D).            D = 1..n+4; 1..4 are pegs, 5..n+4 are disks
    on0(A,B).           in the start state, A rests directly on B
    ongoal(A,B).        in the goal state, A rests directly on B

On the wire a LARGER disk identifier means a SMALLER disk. Internally disk
sizes run 1..n with 1 the smallest, so wire id ``d`` maps to size
``n + 5 - d``. That mapping lives here and nowhere else.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from pathlib import Path

from .core import PEGS, Configuration, Plan, full_tower, validate_configuration, validate_plan
from .oracle import fs_number

log = logging.getLogger(__name__)

PREDICATES = ("step", "time", "disk", "on0", "ongoal")

_FACT = re.compile(r"([a-z_][A-Za-z0-9_]*)\s*\(([^()]*)\)\s*\.(?!\.)")
_INT = re.compile(r"-?\d+")
_RANGE = re.compile(r"(-?\d+)\s*\.\.\s*(-?\d+)")


class ParseError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class Instance:
    n_disks: int
    max_steps: int
    start: Configuration
    goal: Configuration
    source_name: str = field(default="", compare=False)


def to_wire(size: int, n: int) -> int:
    return n + 5 - size


def from_wire(ident: int, n: int) -> int:
    return n + 5 - ident


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("%", 1)[0] for line in text.splitlines())


def _parse_args(raw: str, pred: str) -> list[int | range]:
    out: list[int | range] = []
    for part in raw.split(","):
        part = part.strip()
        m = _RANGE.fullmatch(part)
        if m:
            out.append(range(int(m.group(1)), int(m.group(2)) + 1))
        elif _INT.fullmatch(part):
            out.append(int(part))
        else:
            raise ParseError("syntax", f"{pred}: bad argument {part!r}")
    return out


def _facts(text: str) -> dict[str, list[tuple[int, ...]]]:
    body = _strip_comments(text)
    facts: dict[str, list[tuple[int, ...]]] = {p: [] for p in PREDICATES}
    pos = 0
    for m in _FACT.finditer(body):
        junk = body[pos:m.start()].strip()
        if junk:
            raise ParseError("syntax", f"unexpected text {junk[:40]!r}")
        pos = m.end()
        pred = m.group(1)
        if pred not in facts:
            raise ParseError("unknown-predicate", f"unknown predicate {pred!r}")
        args = _parse_args(m.group(2), pred)
        if pred in ("step", "time", "disk"):
            if len(args) != 1:
                raise ParseError("syntax", f"{pred}/1 expects one argument")
            a = args[0]
            if pred == "step" and isinstance(a, range):
                raise ParseError("syntax", "step/1 takes a single integer")
            for v in (a if isinstance(a, range) else (a,)):
                facts[pred].append((v,))
        else:
            if len(args) != 2 or any(isinstance(a, range) for a in args):
                raise ParseError("syntax", f"{pred}/2 expects two integers")
            facts[pred].append(tuple(args))  # type: ignore[arg-type]
    junk = body[pos:].strip()
    if junk:
        raise ParseError("syntax", f"unexpected text {junk[:40]!r}")
    return facts


def _build(pairs: list[tuple[int, ...]], n: int, which: str) -> Configuration:
    """Chase ``A on B`` links up from each peg into bottom-to-top wire stacks."""
    top_id = n + 4
    below: dict[int, int] = {}
    above: dict[int, int] = {}
    for a, b in pairs:
        if not 5 <= a <= top_id:
            raise ParseError("bad-identifier", f"{which}({a},{b}): {a} is not a disk")
        if not 1 <= b <= top_id or a == b:
            raise ParseError("bad-identifier", f"{which}({a},{b}): {b} is not a peg or disk")
        if a in below:
            raise ParseError("multiple-support", f"{which}: disk {a} rests on both {below[a]} and {b}")
        if b in above:
            raise ParseError("duplicate-support", f"{which}: disks {above[b]} and {a} both rest directly on {b}")
        below[a] = b
        above[b] = a
    stacks: list[list[int]] = []
    placed: set[int] = set()
    for peg in PEGS:
        stack = []
        x = above.get(peg)
        while x is not None:
            stack.append(x)
            placed.add(x)
            x = above.get(x)
        stacks.append(stack)
    for d in sorted(below):
        if d in placed:
            continue
        seen = {d}
        x = below[d]
        while x in below:
            if x in seen:
                raise ParseError("cycle", f"{which}: support chain through disk {d} is a cycle")
            seen.add(x)
            x = below[x]
        raise ParseError("dangling", f"{which}: disk {d} rests on {x}, which is not on any peg")
    for d in range(5, top_id + 1):
        if d not in placed:
            raise ParseError("missing-disk", f"{which}: disk {d} is not placed")
    cfg = Configuration(tuple(tuple(from_wire(d, n) for d in s) for s in stacks))  # type: ignore[arg-type]
    v = validate_configuration(cfg, n)
    if v is not None:
        raise ParseError("invalid-configuration", f"{which}: {v.message}")
    return cfg


def parse_instance(text: str, source_name: str = "<string>") -> Instance:
    facts = _facts(text)
    steps = facts["step"]
    if len(steps) != 1:
        raise ParseError("step", f"expected exactly one step/1 fact, found {len(steps)}")
    max_steps = steps[0][0]
    if max_steps < 0:
        raise ParseError("step", "step bound must be non-negative")
    ids = sorted(v for (v,) in facts["disk"])
    if len(set(ids)) != len(ids):
        raise ParseError("disk", "repeated disk/1 fact")
    if not ids or ids != list(range(1, ids[-1] + 1)) or ids[-1] < 4:
        raise ParseError("disk", "disk/1 facts must cover exactly 1..n+4")
    n = ids[-1] - 4
    times = sorted(v for (v,) in facts["time"])
    if times != list(range(max_steps + 1)):
        log.warning("%s: time/1 facts do not match 0..%d (%d found)", source_name, max_steps, len(times))
    start = _build(facts["on0"], n, "on0")
    goal = _build(facts["ongoal"], n, "ongoal")
    return Instance(n, max_steps, start, goal, source_name)


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), str(path))


def _on_facts(pred: str, cfg: Configuration, n: int) -> list[str]:
    lines = []
    for peg, stack in zip(PEGS, cfg.pegs):
        support = peg
        for size in stack:
            d = to_wire(size, n)
            lines.append(f"{pred}({d},{support}).")
            support = d
    return lines


def emit_instance(inst: Instance) -> str:
    n = inst.n_disks
    lines = [f"step({inst.max_steps})."]
    lines += [f"time({t})." for t in range(inst.max_steps + 1)]
    lines += [f"disk({d})." for d in range(1, n + 5)]
    lines += _on_facts("on0", inst.start, n)
    lines += _on_facts("ongoal", inst.goal, n)
    return "\n".join(lines) + "\n"


def classic_instance(n: int, src: int = 1, dst: int = 4) -> Instance:
    """Full tower ``src -> dst`` with the Frame-Stewart count as the step bound."""
    return Instance(n, fs_number(n), full_tower(n, src), full_tower(n, dst), f"classic-{n}")


def random_instance(n: int, seed: int, steps_margin: Fraction | float | str = 2) -> Instance:
    """Start and goal drawn uniformly over all 4**n configurations."""
    rng = random.Random(seed)
    start = Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])
    goal = Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])
    bound = ceil(Fraction(steps_margin) * fs_number(n))
    return Instance(n, bound, start, goal, f"random-n{n}-s{seed}")


def emit_plan(plan: Plan, inst: Instance) -> str:
    """Plan file text; refuses to write a plan that does not solve ``inst``."""
    failure = validate_plan(inst.start, inst.goal, plan)
    if failure is not None:
        raise ValueError(f"refusing to emit invalid plan: {failure.message}")
    lines = [f"move({t},{a},{b})." for t, (a, b) in enumerate(plan.moves, 1)]
    lines.append(f"len({plan.length}).")
    return "\n".join(lines)


_MOVE = re.compile(r"move\((\d+),([1-4]),([1-4])\)\.")
_LEN = re.compile(r"len\((\d+)\)\.")


def parse_plan(text: str) -> Plan:
    moves = []
    length = None
    for raw in _strip_comments(text).splitlines():
        line = raw.replace(" ", "")
        if not line:
            continue
        m = _MOVE.fullmatch(line)
        if m:
            if length is not None:
                raise ParseError("syntax", "move after len/1")
            if int(m.group(1)) != len(moves) + 1:
                raise ParseError("syntax", f"move index {m.group(1)} out of sequence")
            moves.append((int(m.group(2)), int(m.group(3))))
            continue
        m = _LEN.fullmatch(line)
        if m and length is None:
            length = int(m.group(1))
            continue
        raise ParseError("syntax", f"unexpected line {raw!r}")
    if length is None or length != len(moves):
        raise ParseError("syntax", "len/1 missing or does not match the move count")
    return Plan(tuple(moves))

from __future__ import annotations

import collections
from pathlib import Path

import pytest

from hanoi4.core import PEGS, Configuration, IllegalMoveError, apply_move

GOLDEN = Path(__file__).parent / "golden"

# (criterion, ok, detail) lines collected by test_acceptance.py
ACCEPTANCE: list[tuple[str, bool, str]] = []


def C(**pegs) -> Configuration:
    """``C(p1=[3, 2, 1], p4=[...])`` -> Configuration."""
    return Configuration.from_pegs({int(k[1:]): v for k, v in pegs.items()})


def brute_distance(a: Configuration, b: Configuration) -> int:
    """Plain breadth-first search over Configuration objects; shares no code with the oracle module."""
    if a == b:
        return 0
    dist = {a: 0}
    queue = collections.deque([a])
    while queue:
        x = queue.popleft()
        for s in PEGS:
            for t in PEGS:
                if s == t:
                    continue
                try:
                    y = apply_move(x, (s, t))
                except IllegalMoveError:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == b:
                        return dist[y]
                    queue.append(y)
    raise AssertionError("unreachable goal")


@pytest.fixture
def golden() -> Path:
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")

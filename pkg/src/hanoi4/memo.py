"""Minimum-aggregating answer tables shared by the 3- and 4-peg solvers."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Hashable


class ResourceLimitError(RuntimeError):
    """A solve exceeded its memo-entry cap or its deadline."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


@dataclass
class MemoStats:
    entries: int = 0
    hits: int = 0
    misses: int = 0
    approx_bytes: int = 0


class MemoTable:
    """Maps a canonical subproblem key to ``(best_length, choice)``.

    ``best_length`` is ``None`` for subproblems with no admissible
    decomposition. Recording a key twice keeps the shorter answer.
    """

    # Nominal cost of one entry; byte figures are approximate by design.
    ENTRY_BYTES = 96

    def __init__(self) -> None:
        self.entries: dict[Hashable, tuple[int | None, Any]] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: Hashable) -> bool:
        return key in self.entries

    def lookup(self, key: Hashable) -> tuple[int | None, Any] | None:
        hit = self.entries.get(key)
        if hit is None:
            self.misses += 1
        else:
            self.hits += 1
        return hit

    def peek(self, key: Hashable) -> tuple[int | None, Any] | None:
        return self.entries.get(key)

    def record(self, key: Hashable, length: int | None, choice: Any = None) -> tuple[int | None, Any]:
        old = self.entries.get(key)
        if old is not None and old[0] is not None and (length is None or old[0] <= length):
            return old
        self.entries[key] = (length, choice)
        return self.entries[key]

    def stats(self) -> MemoStats:
        n = len(self.entries)
        return MemoStats(n, self.hits, self.misses, n * self.ENTRY_BYTES)


class Limits:
    """Memo-entry cap and wall-clock deadline checked cooperatively by the solvers."""

    def __init__(self, memo_cap: int | None = None, timeout: float | None = None):
        self.memo_cap = memo_cap
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self._calls = 0

    def check(self, entries: int) -> None:
        if self.memo_cap is not None and entries >= self.memo_cap:
            raise ResourceLimitError("memo-cap", f"{entries} entries")
        self._calls += 1
        if self.deadline is not None and not self._calls & 63 and time.monotonic() > self.deadline:
            raise ResourceLimitError("timeout")

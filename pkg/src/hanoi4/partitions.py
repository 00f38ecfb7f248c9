"""Sub-tower size estimates for the 4-peg decomposition.

Every estimate is evaluated with integer square roots so the floor/ceiling
boundaries are exact for all n.
"""

from __future__ import annotations

import enum
from math import isqrt


class Heuristic(enum.Enum):
    RAND = "rand"
    LIEFVOORT = "liefvoort"
    ROHL_GEDEON = "rohl-gedeon"
    TRI_SMALLEST_GEQ = "tri-smallest-geq"
    TRI_LARGEST_LEQ = "tri-largest-leq"
    STOCKMEYER = "stockmeyer"
    EXHAUSTIVE = "exhaustive"

    @classmethod
    def parse(cls, token: str) -> Heuristic:
        try:
            return cls(token.strip().lower())
        except ValueError:
            names = ", ".join(h.value for h in cls)
            raise ValueError(f"unknown heuristic {token!r} (expected one of: {names})") from None

    def __str__(self) -> str:
        return self.value


# The six formula-driven guides, in table order.
GUIDED = (
    Heuristic.RAND,
    Heuristic.LIEFVOORT,
    Heuristic.ROHL_GEDEON,
    Heuristic.TRI_SMALLEST_GEQ,
    Heuristic.TRI_LARGEST_LEQ,
    Heuristic.STOCKMEYER,
)

DEFAULT_ERROR_BOUND = 2


class TriangularCache:
    """Append-only table of triangular numbers T_k = k(k+1)/2 (index 0 holds T_0 = 0)."""

    def __init__(self) -> None:
        self._values = [0]

    def __len__(self) -> int:
        return len(self._values) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        while len(self._values) <= k:
            j = len(self._values)
            self._values.append(self._values[-1] + j)
        return self._values[k]

    def smallest_k_geq(self, n: int) -> int:
        k = 1
        while self[k] < n:
            k += 1
        return k

    def largest_k_leq(self, n: int) -> int:
        k = 1
        while self[k + 1] <= n:
            k += 1
        return k

    def largest_k_lt(self, n: int) -> int:
        k = 0
        while self[k + 1] < n:
            k += 1
        return k


_TRIANGULAR = TriangularCache()


def triangular(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return _TRIANGULAR[k]


def is_triangular(n: int) -> bool:
    s = isqrt(8 * n + 1)
    return s * s == 8 * n + 1


def estimate_mid(kind: Heuristic, n: int) -> list[int]:
    """Base sub-tower sizes for ``n`` disks, ascending.

    ``Exhaustive`` returns every size 1..n-1. For n <= 1 nothing needs to be
    partitioned and the result is empty.
    """
    if n <= 1:
        return []
    if kind is Heuristic.EXHAUSTIVE:
        return list(range(1, n))
    if kind is Heuristic.RAND:
        # floor(sqrt(2n) + 0.5) is the largest k with (2k - 1)^2 <= 8n
        return [n - (isqrt(8 * n) + 1) // 2]
    if kind is Heuristic.LIEFVOORT:
        # ceil(sqrt(2n + 0.25) - 0.5) = ceil((sqrt(8n + 1) - 1) / 2)
        s = isqrt(8 * n + 1)
        k = (s - 1) // 2
        if s * s != 8 * n + 1 or (s - 1) % 2:
            k += 1
        return [n - k]
    if kind is Heuristic.ROHL_GEDEON:
        return [n - (isqrt(8 * n + 1) - 1) // 2]
    if kind is Heuristic.TRI_SMALLEST_GEQ:
        return [n - _TRIANGULAR.smallest_k_geq(n)]
    if kind is Heuristic.TRI_LARGEST_LEQ:
        return [n - _TRIANGULAR.largest_k_leq(n)]
    if kind is Heuristic.STOCKMEYER:
        k = _TRIANGULAR.largest_k_lt(n)
        if _TRIANGULAR[k + 1] == n:
            return [n - (k + 1)]
        return sorted({n - k, n - (k + 1)})
    raise ValueError(kind)


def candidate_mids(kind: Heuristic, n: int, error_bound: int = DEFAULT_ERROR_BOUND) -> list[int]:
    """Sizes to try, ascending.

    Each base estimate is clamped to [1, n-1], widened by +/- ``error_bound``
    and clamped again.
    """
    if error_bound < 0:
        raise ValueError("error_bound must be >= 0")
    if n <= 1:
        return []
    if kind is Heuristic.EXHAUSTIVE:
        return list(range(1, n))
    mids: set[int] = set()
    for pn in estimate_mid(kind, n):
        # an estimate of 0 (n = 2 for some guides) would leave nothing to try at bound 0
        pn = min(max(pn, 1), n - 1)
        mids.update(range(max(pn - error_bound, 1), min(pn + error_bound, n - 1) + 1))
    return sorted(mids)

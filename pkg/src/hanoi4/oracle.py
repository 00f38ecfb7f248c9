"""Ground truth for small instances: exhaustive BFS and the Frame-Stewart recurrence."""

from __future__ import annotations

import numpy as np

from .core import Configuration, Move, Plan
from .plan4 import check_pair

DEFAULT_CAP = 10
# above this many disks the visited sets are dicts instead of flat arrays
FLAT_LIMIT = 12


class CapacityError(ValueError):
    pass


def encode(cfg: Configuration) -> int:
    """Two bits per disk: bits 2(d-1)..2d-1 hold (peg of disk d) - 1."""
    code = 0
    for i, stack in enumerate(cfg.pegs):
        for d in stack:
            code |= i << (2 * (d - 1))
    return code


def decode(code: int, n: int) -> Configuration:
    return Configuration.from_assignment([((code >> (2 * i)) & 3) + 1 for i in range(n)])


def _tops(codes: np.ndarray, n: int) -> np.ndarray:
    """Index (disk - 1) of the top disk on each peg, ``n`` for empty pegs."""
    pegs = (codes[:, None] >> (2 * np.arange(n, dtype=np.int64))) & 3
    tops = np.full((codes.shape[0], 4), n, dtype=np.int64)
    for p in range(4):
        hit = pegs == p
        tops[:, p] = np.where(hit.any(axis=1), hit.argmax(axis=1), n)
    return tops


def expand(codes: np.ndarray, n: int) -> np.ndarray:
    """All states one legal move away from any state in ``codes`` (with repeats)."""
    if codes.size == 0 or n == 0:
        return np.empty(0, dtype=np.int64)
    tops = _tops(codes, n)
    out = []
    for p in range(4):
        for q in range(4):
            if p == q:
                continue
            legal = tops[:, p] < tops[:, q]
            out.append(codes[legal] ^ (np.int64(p ^ q) << (2 * tops[legal, p])))
    return np.concatenate(out)


def _move_between(a: int, b: int) -> Move:
    diff = a ^ b
    t = (diff & -diff).bit_length() - 1
    t -= t % 2
    return ((a >> t) & 3) + 1, ((b >> t) & 3) + 1


class _FlatDist:
    def __init__(self, n: int):
        self.d = np.full(4 ** n, -1, dtype=np.int16)

    def set(self, codes: np.ndarray, value: int) -> None:
        self.d[codes] = value

    def get(self, codes: np.ndarray) -> np.ndarray:
        return self.d[codes]


class _HashDist:
    def __init__(self, n: int):
        self.d: dict[int, int] = {}

    def set(self, codes: np.ndarray, value: int) -> None:
        for c in codes.tolist():
            self.d[c] = value

    def get(self, codes: np.ndarray) -> np.ndarray:
        d = self.d
        return np.fromiter((d.get(c, -1) for c in codes.tolist()), dtype=np.int64, count=codes.size)


def bfs_optimal(cur: Configuration, goal: Configuration, cap: int = DEFAULT_CAP) -> tuple[int, Plan]:
    """Exact shortest move count from ``cur`` to ``goal`` plus one witness plan.

    Layered bidirectional search; the smaller frontier is expanded first.
    """
    check_pair(cur, goal)
    n = cur.n
    if n > cap:
        raise CapacityError(f"{n} disks exceeds the BFS cap of {cap}")
    s, g = encode(cur), encode(goal)
    if s == g:
        return 0, Plan()
    store = _FlatDist if n <= FLAT_LIMIT else _HashDist
    dist = (store(n), store(n))
    frontier = [np.array([s], dtype=np.int64), np.array([g], dtype=np.int64)]
    depth = [0, 0]
    dist[0].set(frontier[0], 0)
    dist[1].set(frontier[1], 0)
    while True:
        side = 0 if frontier[0].size <= frontier[1].size else 1
        nxt = np.unique(expand(frontier[side], n))
        nxt = nxt[dist[side].get(nxt) < 0]
        depth[side] += 1
        dist[side].set(nxt, depth[side])
        frontier[side] = nxt
        other = dist[1 - side].get(nxt).astype(np.int64)
        met = other >= 0
        if met.any():
            i = int(np.argmin(np.where(met, other, np.iinfo(np.int64).max)))
            meet = int(nxt[i])
            break
        if nxt.size == 0:
            raise RuntimeError("state graph is disconnected")
    fwd = _walk(meet, dist[0], n)
    bwd = _walk(meet, dist[1], n)
    path = fwd[::-1] + bwd[1:]
    moves = tuple(_move_between(a, b) for a, b in zip(path, path[1:]))
    return len(moves), Plan(moves)


def _walk(code: int, dist, n: int) -> list[int]:
    """Descend ``dist`` from ``code`` to its zero; returns the visited codes."""
    out = [code]
    d = int(dist.get(np.array([code], dtype=np.int64))[0])
    while d > 0:
        nb = np.unique(expand(np.array([out[-1]], dtype=np.int64), n))
        dn = dist.get(nb)
        out.append(int(nb[np.flatnonzero(dn == d - 1)[0]]))
        d -= 1
    return out


_FS = [0]


def fs_number(n: int) -> int:
    """Frame-Stewart move count: f(n) = min over k < n of 2 f(k) + 2^(n-k) - 1, f(0) = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_FS) <= n:
        m = len(_FS)
        _FS.append(min(2 * _FS[k] + 2 ** (m - k) - 1 for k in range(m)))
    return _FS[n]


def fs_argmins(n: int) -> list[int]:
    """Every k attaining the recurrence minimum for ``n`` (ties kept)."""
    if n < 1:
        return []
    best = fs_number(n)
    return [k for k in range(n) if 2 * fs_number(k) + 2 ** (n - k) - 1 == best]


def pow3_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return 2 ** n - 1

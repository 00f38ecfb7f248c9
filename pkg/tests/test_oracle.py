from __future__ import annotations

import random

import numpy as np
import pytest

from hanoi4 import oracle
from hanoi4.core import Configuration, full_tower, validate_plan
from hanoi4.oracle import (
    CapacityError,
    bfs_optimal,
    decode,
    encode,
    expand,
    fs_argmins,
    fs_number,
    pow3_number,
)

from conftest import C, brute_distance

# hand evaluation of f(n) = min_k 2 f(k) + 2^(n-k) - 1
FS_SMALL = [0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49]


def test_fs_small_values():
    assert [fs_number(n) for n in range(11)] == FS_SMALL


def test_fs_thirty():
    assert fs_number(30) == 1025


def test_fs_monotone_and_below_three_peg():
    for n in range(1, 64):
        assert fs_number(n) >= fs_number(n - 1)
        assert fs_number(n) <= pow3_number(n)


def test_argmins_report_ties():
    assert fs_argmins(2) == [0, 1]
    assert fs_argmins(3) == [1]
    assert fs_argmins(6) == [3]
    assert fs_argmins(5) == [2, 3]


def test_pow3():
    assert [pow3_number(n) for n in (0, 3, 15)] == [0, 7, 32767]


def test_encode_bijective():
    for n in range(0, 6):
        codes = set()
        for code in range(4 ** n):
            cfg = decode(code, n)
            assert encode(cfg) == code
            codes.add(cfg)
        assert len(codes) == 4 ** n


def test_expand_matches_apply_move():
    from hanoi4.core import IllegalMoveError, apply_move

    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 7)
        cfg = Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])
        want = set()
        for a in range(1, 5):
            for b in range(1, 5):
                if a != b:
                    try:
                        want.add(encode(apply_move(cfg, (a, b))))
                    except IllegalMoveError:
                        pass
        got = set(expand(np.array([encode(cfg)], dtype=np.int64), n).tolist())
        assert got == want


def test_bfs_examples():
    assert bfs_optimal(C(p1=[1]), C(p4=[1]))[0] == 1
    assert bfs_optimal(full_tower(3, 1), full_tower(3, 4))[0] == 5
    assert bfs_optimal(C(p1=[3], p2=[2, 1]), C(p4=[3, 2, 1]))[0] == 4


def test_bfs_against_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(0, 5)
        a = Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])
        b = Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])
        length, plan = bfs_optimal(a, b)
        assert length == brute_distance(a, b)
        assert plan.length == length
        assert validate_plan(a, b, plan) is None
        # move reversal
        assert bfs_optimal(b, a)[0] == length


def test_hashed_store_agrees_with_flat(monkeypatch):
    rng = random.Random(9)
    cases = []
    for _ in range(20):
        n = rng.randint(1, 6)
        cases.append((Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)]),
                      Configuration.from_assignment([rng.randint(1, 4) for _ in range(n)])))
    flat = [bfs_optimal(a, b)[0] for a, b in cases]
    monkeypatch.setattr(oracle, "FLAT_LIMIT", 0)
    hashed = [bfs_optimal(a, b) for a, b in cases]
    assert [h[0] for h in hashed] == flat
    for (a, b), (_, plan) in zip(cases, hashed):
        assert validate_plan(a, b, plan) is None


def test_bfs_cap():
    with pytest.raises(CapacityError):
        bfs_optimal(full_tower(11, 1), full_tower(11, 4))
    assert bfs_optimal(full_tower(4, 1), full_tower(4, 2), cap=4)[0] == 9

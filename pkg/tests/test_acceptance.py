"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <id> <name>: PASS|FAIL`` line
(visible without ``-s``) and enforces its runtime budget.
"""

import io
import random
import time
from contextlib import contextmanager
from itertools import product
from math import comb

import pytest

from maxpawns.bijection import (SubsetPair, all_subset_pairs, arrangement_count, phi,
                                phi_inverse, rank, subsets_to_index_seq, unrank)
from maxpawns.board import Board, from_json, parse_ascii, render_ascii, to_json
from maxpawns.cli import main
from maxpawns.oracle import (count_max_arrangements, count_via_strip_chains,
                             enumerate_max_arrangements, max_pawn_count)
from maxpawns.strips import (SquareType, build_strip_matrix, can_follow, can_stack_strips,
                             enumerate_strips, f)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, name, budget=None):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\nACCEPTANCE {number:>2} {name}: {status} ({elapsed:.2f}s)", end="")
    return run


def semi_sizes(limit):
    return [(n, m) for n in range(1, limit) for m in range(1, limit - n + 1)]


def test_01_strip_census(criterion):
    with criterion(1, "strip census", budget=10):
        for m, expected in zip(range(1, 7), (4, 9, 16, 25, 36, 49)):
            found = enumerate_strips(m)
            entries = list(build_strip_matrix(m))
            assert len(found) == expected
            assert len(set(entries)) == len(entries) == expected
            assert set(entries) == found


def test_02_square_counts(criterion):
    with criterion(2, "square counts", budget=10):
        got = [count_max_arrangements(2 * m, 2 * m).num_max_arrangements for m in range(1, 5)]
        assert got == [comb(2 * m, m) ** 2 for m in range(1, 5)] == [4, 36, 400, 4900]


def test_03_rectangular_counts(criterion):
    with criterion(3, "rectangular counts", budget=60):
        for n, m in semi_sizes(7):
            dp = count_max_arrangements(2 * n, 2 * m).num_max_arrangements
            assert dp == count_via_strip_chains(n, m) == comb(m + n, n) ** 2, (n, m)


def _check_bijection(n, m):
    images = {}
    for p in all_subset_pairs(n, m):
        b = phi(p)
        assert b not in images, f"phi not injective at {p}"
        images[b] = p
        assert phi_inverse(b) == p
    brute = enumerate_max_arrangements(2 * n, 2 * m)
    assert len(brute) == len(set(brute)) == len(images) == comb(m + n, n) ** 2
    assert set(brute) == set(images)


def test_04_bijection_totality(criterion):
    with criterion(4, "bijection totality", budget=120):
        for n, m in semi_sizes(5):
            _check_bijection(n, m)
        # the 10x10 board, C(10,5)^2 = 63504 arrangements
        assert count_max_arrangements(10, 10).num_max_arrangements == 63504
        _check_bijection(5, 5)


def test_05_paper_examples(criterion):
    with criterion(5, "paper examples"):
        cases = [
            ((3, 3, (1, 4, 5), (2, 4, 6)), ((1, 2), (3, 3), (3, 4))),
            ((4, 4, (2, 3, 4, 8), (1, 6, 7, 8)), ((2, 1), (2, 5), (2, 5), (5, 5))),
        ]
        for (n, m, R, C), expected in cases:
            p = SubsetPair(n, m, R, C)
            assert subsets_to_index_seq(p).pairs == expected
            out = io.StringIO()
            assert main(["decode", "--rows", str(2 * n), "--cols", str(2 * m),
                         "--R", ",".join(map(str, R)), "--C", ",".join(map(str, C)),
                         "--format", "json"], out) == 0
            board = from_json(out.getvalue())
            assert phi_inverse(board) == p
            assert p.to_json() == ('{"n":%d,"m":%d,"R":[%s],"C":[%s]}'
                                   % (n, m, ",".join(map(str, R)), ",".join(map(str, C))))


def test_06_dominance_law(criterion):
    with criterion(6, "dominance law", budget=30):
        for m in range(1, 6):
            M = build_strip_matrix(m)
            idx = list(product(range(1, m + 2), repeat=2))
            for (i, j), (i2, j2) in product(idx, idx):
                assert can_stack_strips(M[i, j], M[i2, j2]) == (i <= i2 and j <= j2)


def test_07_odd_boards(criterion):
    with criterion(7, "odd boards", budget=10):
        for k in (3, 5, 7):
            assert count_max_arrangements(k, k).num_max_arrangements == 2
            odd = range(1, k + 1, 2)
            row_fill = Board(k, k, [(r, c) for r in odd for c in range(1, k + 1)])
            col_fill = Board(k, k, [(r, c) for r in range(1, k + 1) for c in odd])
            assert set(enumerate_max_arrangements(k, k)) == {row_fill, col_fill}


def test_08_bound_achievement(criterion):
    with criterion(8, "bound achievement"):
        for n, m in semi_sizes(7):
            assert max_pawn_count(2 * n, 2 * m) == 2 * n * m


def test_09_table_laws(criterion):
    A, B, C, D = SquareType.A, SquareType.B, SquareType.C, SquareType.D
    followers = {A: {A, B}, B: {B}, C: {B, C}, D: {A, B, C, D}}
    with criterion(9, "table laws"):
        assert all(f(f(t)) is C for t in SquareType)
        for left, right in product(SquareType, SquareType):
            assert can_follow(left, right) == (right in followers[left])
        for m in range(1, 6):
            M = build_strip_matrix(m)
            k = m + 1
            for i, j in product(range(1, k + 1), repeat=2):
                for i2 in range(i + 1, k + 1):
                    for x, y in zip(M[i, j].word, M[i2, j].word):
                        assert x == y or (x, y) in {(A, D), (B, C)}
                for j2 in range(j + 1, k + 1):
                    for x, y in zip(M[i, j].word, M[i, j2].word):
                        assert x == y or (x, y) in {(A, B), (D, C)}


def test_10_codec(criterion):
    rng = random.Random(20261018)
    with criterion(10, "codec"):
        for n, m in semi_sizes(4):
            for k in range(arrangement_count(n, m)):
                assert rank(unrank(k, n, m)) == k
        for _ in range(1000):
            n = rng.randint(1, 5)
            m = 6 - n
            k = rng.randrange(arrangement_count(n, m))
            assert rank(unrank(k, n, m)) == k
        pool = []
        for rows, cols in [(2, 2), (3, 3), (4, 4), (3, 5), (4, 6), (6, 4), (5, 5), (6, 6), (7, 4), (6, 8), (8, 6)]:
            pool.extend(enumerate_max_arrangements(rows, cols))
        for b in rng.sample(pool, 1000):
            assert from_json(to_json(b)) == b
            assert parse_ascii(render_ascii(b)) == b

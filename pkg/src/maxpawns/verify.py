"""Self-check suite behind ``maxpawns verify``.

Each check compares the constructive side (strip matrix, bijection, closed
formula) against the brute-force side (attack model, profile DP,
backtracking) for every board with ``n + m <= max_semi``.  Module functions
are looked up at call time so a patched module is what gets verified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import comb

from . import bijection, board, oracle, strips

MAX_SEMI_LIMIT = 7

FOLLOW_TABLE = {
    "A": {"A", "B"},
    "B": {"B"},
    "C": {"B", "C"},
    "D": {"A", "B", "C", "D"},
}

_CANONICAL_WORD = re.compile(r"D*(A*|C*)B*")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _sizes(max_semi):
    return [(n, m) for n in range(1, max_semi) for m in range(1, max_semi - n + 1)]


def check_f_table(max_semi):
    S = strips.SquareType
    expected = {S.A: S.D, S.B: S.C, S.C: S.C, S.D: S.C}
    for t in S:
        if strips.f(t) is not expected[t]:
            return f"f({t.value}) != {expected[t].value}"
        if strips.f(strips.f(t)) is not S.C:
            return f"f(f({t.value})) != C"
    return None


def check_follow_table(max_semi):
    S = strips.SquareType
    for left, right in product(S, S):
        expected = right.value in FOLLOW_TABLE[left.value]
        if strips.can_follow(left, right) != expected:
            return f"can_follow({left.value},{right.value}) != {expected}"
    return None


def check_strip_census(max_semi):
    for m in range(1, max_semi):
        found = strips.enumerate_strips(m)
        entries = list(strips.build_strip_matrix(m))
        if len(found) != (m + 1) ** 2:
            return f"m={m}: {len(found)} strips, expected {(m + 1) ** 2}"
        if len(set(entries)) != len(entries) or set(entries) != found:
            return f"m={m}: matrix entries differ from exhaustive census"
        for s in entries:
            if not _CANONICAL_WORD.fullmatch(str(s)):
                return f"m={m}: entry {s} not of the form D*A*B* or D*C*B*"
    return None


def check_action_laws(max_semi):
    column_moves = {("A", "D"), ("B", "C")}
    row_moves = {("A", "B"), ("D", "C")}
    for m in range(1, max_semi):
        M = strips.build_strip_matrix(m)
        k = m + 1
        for i, j in product(range(1, k + 1), repeat=2):
            for i2 in range(i + 1, k + 1):
                for x, y in zip(str(M[i, j]), str(M[i2, j])):
                    if x != y and (x, y) not in column_moves:
                        return f"m={m}: column move {x}->{y} between ({i},{j}) and ({i2},{j})"
            for j2 in range(j + 1, k + 1):
                for x, y in zip(str(M[i, j]), str(M[i, j2])):
                    if x != y and (x, y) not in row_moves:
                        return f"m={m}: row move {x}->{y} between ({i},{j}) and ({i},{j2})"
    return None


def check_dominance(max_semi):
    for m in range(1, max_semi):
        M = strips.build_strip_matrix(m)
        idx = list(product(range(1, m + 2), repeat=2))
        for (i, j), (i2, j2) in product(idx, idx):
            expected = i <= i2 and j <= j2
            if strips.can_stack_strips(M[i, j], M[i2, j2]) != expected:
                return f"m={m}: stacking ({i},{j}) over ({i2},{j2}) != {expected}"
    return None


def check_counts(max_semi):
    for n, m in _sizes(max_semi):
        formula = bijection.arrangement_count(n, m)
        dp = oracle.count_max_arrangements(2 * n, 2 * m)
        chains = oracle.count_via_strip_chains(n, m)
        if formula != comb(m + n, n) ** 2 or not formula == dp.num_max_arrangements == chains:
            return (f"{2 * n}x{2 * m}: formula={formula} dp={dp.num_max_arrangements} "
                    f"chains={chains}")
        if dp.max_pawns != 2 * n * m:
            return f"{2 * n}x{2 * m}: maximum {dp.max_pawns}, expected {2 * n * m}"
        flipped = oracle.count_max_arrangements(2 * m, 2 * n)
        if flipped != dp:
            return f"{2 * n}x{2 * m}: transpose count differs"
    return None


def check_odd_boards(max_semi):
    for k in (3, 5, 7):
        res = oracle.count_max_arrangements(k, k)
        if res.num_max_arrangements != 2:
            return f"{k}x{k}: {res.num_max_arrangements} maximum arrangements, expected 2"
    return None


def check_bijection(max_semi):
    for n, m in _sizes(max_semi):
        images = {}
        for p in bijection.all_subset_pairs(n, m):
            b = bijection.phi(p)
            if b in images:
                return f"{2 * n}x{2 * m}: phi not injective at {p}"
            if bijection.phi_inverse(b) != p:
                return f"{2 * n}x{2 * m}: phi_inverse(phi(p)) != p for {p}"
            images[b] = p
        brute = oracle.enumerate_max_arrangements(2 * n, 2 * m)
        if set(brute) != set(images) or len(brute) != len(images):
            return f"{2 * n}x{2 * m}: image of phi differs from brute-force enumeration"
    return None


def check_examples(max_semi):
    cases = [
        ((3, 3, (1, 4, 5), (2, 4, 6)), ((1, 2), (3, 3), (3, 4))),
        ((4, 4, (2, 3, 4, 8), (1, 6, 7, 8)), ((2, 1), (2, 5), (2, 5), (5, 5))),
    ]
    for args, expected in cases:
        p = bijection.SubsetPair(*args)
        if bijection.subsets_to_index_seq(p).pairs != expected:
            return f"index sequence of {p} != {expected}"
        if bijection.phi_inverse(board.from_json(board.to_json(bijection.phi(p)))) != p:
            return f"decode/encode round trip failed for {p}"
    return None


def check_codec(max_semi):
    for n, m in _sizes(max_semi):
        for k in range(bijection.arrangement_count(n, m)):
            if bijection.rank(bijection.unrank(k, n, m)) != k:
                return f"{2 * n}x{2 * m}: rank(unrank({k})) != {k}"
    return None


CHECKS = [
    ("f-table", check_f_table),
    ("follow-table", check_follow_table),
    ("strip-census", check_strip_census),
    ("action-laws", check_action_laws),
    ("dominance-law", check_dominance),
    ("counts", check_counts),
    ("odd-boards", check_odd_boards),
    ("bijection", check_bijection),
    ("paper-examples", check_examples),
    ("rank-codec", check_codec),
]


def run_checks(max_semi: int) -> list[CheckResult]:
    if not 2 <= max_semi <= MAX_SEMI_LIMIT:
        raise ValueError(f"max_semi must be in 2..{MAX_SEMI_LIMIT}, got {max_semi}")
    # rebuild matrices from the current definitions rather than trusting the cache
    strips.build_strip_matrix.cache_clear()
    results = []
    for name, check in CHECKS:
        try:
            problem = check(max_semi)
        except Exception as exc:  # a crash is a failed identity, not a usage error
            problem = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, problem is None, problem or ""))
    return results

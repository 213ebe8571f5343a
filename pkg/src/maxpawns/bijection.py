"""Subset pairs <-> maximum pawn arrangements on 2n x 2m boards.

A pair of n-subsets ``R, C`` of ``{1, ..., m + n}`` is shifted to a
monotone index sequence ``(r_i - i + 1, c_i - i + 1)``; each index pair
selects a strip of the width-m strip matrix and the strips are stacked top
to bottom.  Every maximum arrangement arises exactly once this way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .board import Board, violations
from .strips import (DecompositionError, NotInMatrix, build_strip_matrix,
                     locate_strip, stack_boards, strip_from_masks, strip_to_board)


class InvalidSubsetPair(ValueError):
    pass


class InvalidIndexSeq(ValueError):
    pass


class OddDimensions(ValueError):
    pass


class NotMaximumIndependent(ValueError):
    pass


class RankOutOfRange(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """Raised when a theorem-level guarantee fails; indicates a bug."""


def _positive(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidSubsetPair(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class SubsetPair:
    """``n`` rows ``R`` and ``n`` columns ``C`` chosen from ``[m + n]``.

    Input subsets may arrive unsorted; they are stored ascending.  Duplicates,
    out-of-range values and size mismatches raise :class:`InvalidSubsetPair`.
    """

    n: int
    m: int
    R: tuple
    C: tuple

    def __post_init__(self):
        _positive("n", self.n)
        _positive("m", self.m)
        top = self.m + self.n
        for name in ("R", "C"):
            values = list(getattr(self, name))
            if len(values) != self.n:
                raise InvalidSubsetPair(
                    f"{name} has {len(values)} elements, expected n={self.n}")
            for v in values:
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= top:
                    raise InvalidSubsetPair(f"{name} element {v!r} outside 1..{top}")
            if len(set(values)) != len(values):
                raise InvalidSubsetPair(f"{name} contains duplicate elements")
            object.__setattr__(self, name, tuple(sorted(values)))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "m": self.m, "R": list(self.R), "C": list(self.C)},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SubsetPair":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSubsetPair(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or set(data) != {"n", "m", "R", "C"}:
            raise InvalidSubsetPair('expected object with keys "n", "m", "R", "C"')
        if not isinstance(data["R"], list) or not isinstance(data["C"], list):
            raise InvalidSubsetPair('"R" and "C" must be lists')
        return cls(data["n"], data["m"], tuple(data["R"]), tuple(data["C"]))


@dataclass(frozen=True)
class IndexSeq:
    """Strip-matrix indices ``(a_i, b_i)``, weakly increasing in both coordinates."""

    m: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidIndexSeq(f"m must be a positive integer, got {self.m!r}")
        if not pairs:
            raise InvalidIndexSeq("index sequence is empty")
        for a, b in pairs:
            if not (1 <= a <= self.m + 1 and 1 <= b <= self.m + 1):
                raise InvalidIndexSeq(f"index ({a},{b}) outside 1..{self.m + 1}")
        for (a0, b0), (a1, b1) in zip(pairs, pairs[1:]):
            if a0 > a1 or b0 > b1:
                raise InvalidIndexSeq(f"indices ({a0},{b0}) -> ({a1},{b1}) are not monotone")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)


def subsets_to_index_seq(p: SubsetPair) -> IndexSeq:
    return IndexSeq(p.m, tuple((r - i, c - i) for i, (r, c) in enumerate(zip(p.R, p.C))))


def index_seq_to_subsets(s: IndexSeq) -> SubsetPair:
    return SubsetPair(s.n, s.m,
                      tuple(a + i for i, (a, _) in enumerate(s.pairs)),
                      tuple(b + i for i, (_, b) in enumerate(s.pairs)))


def phi(p: SubsetPair) -> Board:
    M = build_strip_matrix(p.m)
    seq = subsets_to_index_seq(p)
    return stack_boards(*(strip_to_board(M[a, b]) for a, b in seq.pairs))


def phi_inverse(board: Board) -> SubsetPair:
    if board.rows % 2 or board.cols % 2:
        raise OddDimensions(f"odd dimensions {board.rows}x{board.cols}")
    bad = violations(board)
    if bad:
        (r1, c1), (r2, c2) = bad[0]
        raise NotMaximumIndependent(f"not independent: pawns at ({r1},{c1}) and ({r2},{c2}) attack")
    n, m = board.rows // 2, board.cols // 2
    if len(board) != 2 * n * m:
        raise NotMaximumIndependent(
            f"not a maximum arrangement: {len(board)} pawns, expected {2 * n * m}")
    M = build_strip_matrix(m)
    masks = board.row_masks()
    pairs = []
    for k in range(n):
        try:
            s = strip_from_masks(masks[2 * k], masks[2 * k + 1], m,
                                 f"rows {2 * k + 1}-{2 * k + 2}")
            pairs.append(locate_strip(M, s))
        except (DecompositionError, NotInMatrix) as exc:
            raise NotMaximumIndependent(f"not a maximum arrangement: {exc}") from None
    try:
        seq = IndexSeq(m, tuple(pairs))
    except InvalidIndexSeq as exc:
        raise InvariantViolation(f"independent maximum board gave non-monotone strips: {exc}")
    return index_seq_to_subsets(seq)


def arrangement_count(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")
    return comb(m + n, n) ** 2


def subset_rank(subset, universe: int) -> int:
    """Lexicographic rank of a sorted subset of ``{1, ..., universe}``."""
    k = len(subset)
    rank, prev = 0, 0
    for i, x in enumerate(subset, 1):
        for v in range(prev + 1, x):
            rank += comb(universe - v, k - i)
        prev = x
    return rank


def subset_unrank(rank: int, k: int, universe: int) -> tuple:
    out, v = [], 1
    for i in range(1, k + 1):
        while True:
            block = comb(universe - v, k - i)
            if rank < block:
                break
            rank -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def rank(board: Board) -> int:
    p = phi_inverse(board)
    top = p.m + p.n
    return subset_rank(p.R, top) * comb(top, p.n) + subset_rank(p.C, top)


def unrank(k: int, n: int, m: int) -> Board:
    total = arrangement_count(n, m)
    if not 0 <= k < total:
        raise RankOutOfRange(f"index {k} outside 0..{total - 1}")
    top = m + n
    rank_r, rank_c = divmod(k, comb(top, n))
    return phi(SubsetPair(n, m, subset_unrank(rank_r, n, top), subset_unrank(rank_c, n, top)))


def all_subset_pairs(n: int, m: int):
    """Every subset pair in rank order."""
    subsets = list(combinations(range(1, m + n + 1), n))
    for R in subsets:
        for C in subsets:
            yield SubsetPair(n, m, R, C)

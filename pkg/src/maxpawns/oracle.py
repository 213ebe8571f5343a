"""Structure-free verification engines.

Nothing here knows about strips or subsets.  Boards are scanned row by row
with the previous row's pawn bitmask as state (bit ``c - 1`` is column
``c``).  Pawns in one row never attack each other, so a row mask ``cur`` may
follow ``prev`` exactly when ``cur`` avoids the diagonal shadow
``(prev << 1) | (prev >> 1)``.  That relation is symmetric, so the masks
allowed next to ``cur`` are the subsets of ``allowed(cur)``, and a
subset-sum (zeta) transform over the (max, count) semiring handles each row
in ``O(cols * 2**cols)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Board

MAX_SIDE = 14
ENUMERATION_GUARD = 10 ** 7


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class CountResult:
    max_pawns: int
    num_max_arrangements: int


def _check_dims(rows, cols):
    for name, v in (("rows", rows), ("cols", cols)):
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= MAX_SIDE:
            raise OracleError(f"{name}={v!r} outside supported range 1..{MAX_SIDE}")


def _allowed(mask, full):
    return ~((mask << 1) | (mask >> 1)) & full


def _subset_best(best, count, cols):
    """For every mask S, the best value (and multiplicity) over subsets of S."""
    best, count = best[:], count[:]
    size = 1 << cols
    for bit in range(cols):
        step = 1 << bit
        for s in range(size):
            if s & step:
                t = s ^ step
                bt, bs = best[t], best[s]
                if bt > bs:
                    best[s], count[s] = bt, count[t]
                elif bt == bs:
                    count[s] += count[t]
    return best, count


def _profile_dp(rows, cols):
    size = 1 << cols
    full = size - 1
    pops = [bin(s).count("1") for s in range(size)]
    allowed = [_allowed(s, full) for s in range(size)]
    best, count = pops[:], [1] * size
    for _ in range(rows - 1):
        sub_best, sub_count = _subset_best(best, count, cols)
        best = [sub_best[allowed[s]] + pops[s] for s in range(size)]
        count = [sub_count[allowed[s]] for s in range(size)]
    top = max(best)
    return CountResult(top, sum(c for b, c in zip(best, count) if b == top))


def count_max_arrangements(rows: int, cols: int) -> CountResult:
    _check_dims(rows, cols)
    return _profile_dp(rows, cols)


def max_pawn_count(rows: int, cols: int) -> int:
    return count_max_arrangements(rows, cols).max_pawns


def _suffix_bounds(rows, cols):
    """``bound[r][prev]``: most pawns placeable in rows ``r..rows`` below mask ``prev``.

    Row indices are 0-based here; ``bound[rows]`` is all zeros.
    """
    size = 1 << cols
    full = size - 1
    pops = [bin(s).count("1") for s in range(size)]
    allowed = [_allowed(s, full) for s in range(size)]
    bound = [None] * (rows + 1)
    bound[rows] = [0] * size
    for r in range(rows - 1, -1, -1):
        here = [pops[s] + bound[r + 1][s] for s in range(size)]
        sub_best, _ = _subset_best(here, [0] * size, cols)
        bound[r] = [sub_best[allowed[s]] for s in range(size)]
    return bound


def _submasks_ascending(mask):
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    return subs


def iter_max_row_masks(rows: int, cols: int):
    """Yield the row-mask tuples of all maximum arrangements in canonical order.

    Order is lexicographic on ``(mask_row1, mask_row2, ...)``.  Backtracking
    only descends into masks whose exact suffix bound still reaches the
    maximum, so every branch ends in a solution.
    """
    _check_dims(rows, cols)
    full = (1 << cols) - 1
    bound = _suffix_bounds(rows, cols)
    # the bound is exact, so the admissible next masks depend only on (row, prev)
    children = {}

    def admissible(r, prev):
        key = (r, prev)
        kids = children.get(key)
        if kids is None:
            nxt = bound[r + 1]
            need = bound[r][prev]
            kids = children[key] = [cur for cur in _submasks_ascending(_allowed(prev, full))
                                    if bin(cur).count("1") + nxt[cur] == need]
        return kids

    masks = [0] * rows

    def descend(r, prev):
        if r == rows:
            yield tuple(masks)
            return
        for cur in admissible(r, prev):
            masks[r] = cur
            yield from descend(r + 1, cur)

    # a virtual empty row above row 1 leaves every mask admissible
    yield from descend(0, 0)


def enumerate_max_arrangements(rows: int, cols: int) -> list[Board]:
    _check_dims(rows, cols)
    total = count_max_arrangements(rows, cols).num_max_arrangements
    if total > ENUMERATION_GUARD:
        raise OracleError(
            f"{rows}x{cols} has {total} maximum arrangements, above the guard of {ENUMERATION_GUARD}")
    return [Board.from_row_masks(cols, masks) for masks in iter_max_row_masks(rows, cols)]


def count_via_strip_chains(n: int, m: int) -> int:
    """Number of length-n chains in the product order on ``[1, m + 1]^2``."""
    if n < 1 or m < 1:
        raise OracleError(f"n and m must be positive, got n={n}, m={m}")
    k = m + 1
    ways = [[1] * k for _ in range(k)]
    for _ in range(n - 1):
        # 2-D prefix sums: chains ending at any index dominated by (i, j)
        nxt = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                nxt[i][j] = (ways[i][j]
                             + (nxt[i - 1][j] if i else 0)
                             + (nxt[i][j - 1] if j else 0)
                             - (nxt[i - 1][j - 1] if i and j else 0))
        ways = nxt
    return sum(map(sum, ways))

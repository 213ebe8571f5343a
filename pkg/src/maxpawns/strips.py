"""Maximum pawn arrangements on 2 x 2m strips and the strip matrix.

A strip is read as a word of ``m`` 2x2 blocks, each holding one of the four
two-pawn patterns ``A`` (top row), ``B`` (right column), ``C`` (bottom row)
and ``D`` (left column).  The strip matrix for width ``m`` is the
``(m + 1) x (m + 1)`` array whose entry ``(i, j)`` is::

    D^p A^q B^s   or   D^p C^r B^s

obtained from ``A^(m+1-j) B^(j-1)`` by mapping the leftmost ``i - 1`` blocks
through :func:`f`.  Indices are 1-based throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .board import Board, Cell, attacks, is_independent


class SquareType(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Block-local (row, col) pawn cells, 1-based."""
        return _GEOMETRY[self]

    def __str__(self):
        return self.value


_GEOMETRY = {
    SquareType.A: ((1, 1), (1, 2)),
    SquareType.B: ((1, 2), (2, 2)),
    SquareType.C: ((2, 1), (2, 2)),
    SquareType.D: ((1, 1), (2, 1)),
}

A, B, C, D = SquareType.A, SquareType.B, SquareType.C, SquareType.D


class StripError(ValueError):
    pass


class NotInMatrix(StripError):
    pass


class DecompositionError(RuntimeError):
    """A maximum placement did not split into the four block patterns."""


def f(t: SquareType) -> SquareType:
    return D if t is A else C


@dataclass(frozen=True)
class Strip:
    word: tuple

    def __post_init__(self):
        word = tuple(SquareType(t) if not isinstance(t, SquareType) else t for t in self.word)
        if not word:
            raise StripError("strip must have at least one block")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Strip":
        text = text.strip()
        try:
            return cls(tuple(SquareType(ch) for ch in text))
        except ValueError:
            raise StripError(f"invalid strip notation {text!r}") from None

    @property
    def width(self) -> int:
        return len(self.word)

    def __str__(self):
        return "".join(t.value for t in self.word)

    def __lt__(self, other):
        return str(self) < str(other)


def _check_index(m: int, name: str, k: int):
    if not 1 <= k <= m + 1:
        raise StripError(f"{name}={k} out of range 1..{m + 1}")


def first_row_strip(m: int, j: int) -> Strip:
    if m < 1:
        raise StripError(f"width must be positive, got {m}")
    _check_index(m, "j", j)
    return Strip((A,) * (m + 1 - j) + (B,) * (j - 1))


def strip_entry(m: int, i: int, j: int) -> Strip:
    top = first_row_strip(m, j)
    _check_index(m, "i", i)
    word = top.word
    return Strip(tuple(f(t) for t in word[:i - 1]) + word[i - 1:])


class StripMatrix:
    """Immutable ``(m + 1) x (m + 1)`` array of strips, indexed from 1."""

    def __init__(self, m: int, entries):
        self.m = m
        self._entries = tuple(tuple(row) for row in entries)
        self._index = {}
        for i, row in enumerate(self._entries, 1):
            for j, s in enumerate(row, 1):
                if s in self._index:
                    raise DecompositionError(f"strip {s} appears twice in matrix")
                self._index[s] = (i, j)

    @property
    def size(self) -> int:
        return self.m + 1

    @property
    def entries(self) -> tuple:
        return self._entries

    def __getitem__(self, ij) -> Strip:
        i, j = ij
        _check_index(self.m, "i", i)
        _check_index(self.m, "j", j)
        return self._entries[i - 1][j - 1]

    def __iter__(self):
        for row in self._entries:
            yield from row

    def __len__(self):
        return self.size ** 2

    def locate(self, s: Strip) -> tuple[int, int]:
        try:
            return self._index[s]
        except KeyError:
            raise NotInMatrix(f"strip {s} is not an entry of the width-{self.m} matrix") from None

    def __repr__(self):
        return f"StripMatrix(m={self.m})"


@lru_cache(maxsize=None)
def build_strip_matrix(m: int) -> StripMatrix:
    if m < 1:
        raise StripError(f"width must be positive, got {m}")
    return StripMatrix(m, [[strip_entry(m, i, j) for j in range(1, m + 2)]
                           for i in range(1, m + 2)])


def locate_strip(M: StripMatrix, s: Strip) -> tuple[int, int]:
    if s.width != M.m:
        raise NotInMatrix(f"strip {s} has width {s.width}, matrix has width {M.m}")
    return M.locate(s)


@lru_cache(maxsize=4096)
def strip_to_board(s: Strip) -> Board:
    pawns = [Cell(r, 2 * k + c)
             for k, t in enumerate(s.word)
             for r, c in t.cells]
    return Board(2, 2 * s.width, frozenset(pawns))


# block pattern as (top-row bits, bottom-row bits) over the block's two columns
_BY_BITS = {
    (sum(1 << (c - 1) for r, c in cells if r == 1),
     sum(1 << (c - 1) for r, c in cells if r == 2)): t
    for t, cells in _GEOMETRY.items()
}


def strip_from_masks(top: int, bottom: int, m: int, where: str = "strip") -> Strip:
    """Decode a strip from the pawn bitmasks of its two rows (bit ``c - 1`` = column ``c``)."""
    word = []
    for k in range(m):
        t = _BY_BITS.get((top >> 2 * k & 3, bottom >> 2 * k & 3))
        if t is None:
            raise DecompositionError(
                f"block {k + 1} of {where} is not one of the two-pawn patterns")
        word.append(t)
    if (top | bottom) >> 2 * m:
        raise DecompositionError(f"{where} is wider than {m} blocks")
    return Strip(tuple(word))


def strip_from_board(board: Board, top_row: int = 1) -> Strip:
    """Read rows ``top_row`` and ``top_row + 1`` of ``board`` as a strip.

    Raises :class:`DecompositionError` when some 2x2 block is not one of the
    four two-pawn patterns.
    """
    if board.cols % 2:
        raise DecompositionError(f"odd number of columns ({board.cols})")
    masks = board.row_masks()
    return strip_from_masks(masks[top_row - 1], masks[top_row], board.cols // 2,
                            f"rows {top_row}-{top_row + 1}")


def can_follow(left: SquareType, right: SquareType) -> bool:
    return is_independent(strip_to_board(Strip((left, right))))


def stack_boards(*boards: Board) -> Board:
    """Concatenate equal-width boards top to bottom."""
    cols = boards[0].cols
    pawns, offset = [], 0
    for b in boards:
        if b.cols != cols:
            raise StripError(f"width mismatch: {b.cols} != {cols}")
        pawns.extend(Cell(r + offset, c) for r, c in b.pawns)
        offset += b.rows
    return Board._trusted(offset, cols, frozenset(pawns))


def can_stack_strips(top: Strip, bottom: Strip) -> bool:
    if top.width != bottom.width:
        raise StripError(f"width mismatch: {top.width} != {bottom.width}")
    return is_independent(stack_boards(strip_to_board(top), strip_to_board(bottom)))


def enumerate_strips(m: int) -> set[Strip]:
    """Every independent placement of ``2m`` pawns on a 2 x 2m board.

    The search walks columns left to right using only :func:`attacks`; the
    strip matrix is never consulted.  Each column holds a subset of the two
    rows, and ``r`` unfilled columns can add at most ``2 * ceil(r / 2)``
    pawns, which prunes hopeless branches.
    """
    if m < 1:
        raise StripError(f"width must be positive, got {m}")
    cols = 2 * m
    target = 2 * m
    column_choices = [(), (1,), (2,), (1, 2)]
    found = []

    def extend(col, prev, pawns):
        remaining = cols - col + 1
        if len(pawns) + 2 * ((remaining + 1) // 2) < target:
            return
        if col > cols:
            if len(pawns) == target:
                found.append(frozenset(pawns))
            return
        for rows in column_choices:
            cells = [(r, col) for r in rows]
            if any(attacks(p, q) for p in cells for q in prev):
                continue
            extend(col + 1, cells, pawns + cells)

    extend(1, [], [])
    strips = set()
    for cells in found:
        strips.add(strip_from_board(Board(2, cols, cells)))
    if len(strips) != len(found):
        raise DecompositionError("distinct placements collapsed to the same strip")
    return strips

"""Boards, the pawn attack relation and board (de)serialization.

Coordinates are 1-based with row 1 at the top.  Two pawns attack each other
when they sit on diagonally adjacent cells; colour and facing play no role.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


class BoardError(ValueError):
    """Base class for invalid board input."""


class MalformedBoardError(BoardError):
    pass


class CellOutOfRangeError(BoardError):
    pass


class DuplicateCellError(BoardError):
    pass


def attacks(p, q) -> bool:
    return abs(p[0] - q[0]) == 1 and abs(p[1] - q[1]) == 1


@lru_cache(maxsize=1 << 16)
def _row_cells(row, mask):
    return tuple(Cell(row, c + 1) for c in range(mask.bit_length()) if mask >> c & 1)


@dataclass(frozen=True)
class Board:
    rows: int
    cols: int
    pawns: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.rows, int) or not isinstance(self.cols, int) \
                or isinstance(self.rows, bool) or isinstance(self.cols, bool):
            raise MalformedBoardError("board dimensions must be integers")
        if self.rows < 1 or self.cols < 1:
            raise MalformedBoardError(
                f"board dimensions must be positive, got {self.rows}x{self.cols}")
        cells = [Cell(*p) for p in self.pawns]
        seen = set()
        for cell in cells:
            if not (1 <= cell.row <= self.rows and 1 <= cell.col <= self.cols):
                raise CellOutOfRangeError(
                    f"cell ({cell.row},{cell.col}) outside {self.rows}x{self.cols} board")
            if cell in seen:
                raise DuplicateCellError(f"duplicate cell ({cell.row},{cell.col})")
            seen.add(cell)
        object.__setattr__(self, "pawns", frozenset(seen))

    @classmethod
    def from_row_masks(cls, cols: int, masks: Iterable[int]) -> "Board":
        """Build a board from per-row bitmasks; bit ``c - 1`` marks column ``c``."""
        masks = list(masks)
        for mask in masks:
            if mask >> cols:
                raise CellOutOfRangeError(f"row mask {mask:#x} wider than {cols} columns")
        pawns = frozenset(cell for r, mask in enumerate(masks, 1)
                          for cell in _row_cells(r, mask))
        return cls._trusted(len(masks), cols, pawns)

    @classmethod
    def _trusted(cls, rows, cols, pawns: frozenset) -> "Board":
        # caller guarantees in-range Cell instances
        board = object.__new__(cls)
        object.__setattr__(board, "rows", rows)
        object.__setattr__(board, "cols", cols)
        object.__setattr__(board, "pawns", pawns)
        return board

    def row_masks(self) -> tuple[int, ...]:
        masks = [0] * self.rows
        for r, c in self.pawns:
            masks[r - 1] |= 1 << (c - 1)
        return tuple(masks)

    def sorted_pawns(self) -> list[Cell]:
        return sorted(self.pawns)

    def transpose(self) -> "Board":
        return Board(self.cols, self.rows, frozenset(Cell(c, r) for r, c in self.pawns))

    def __len__(self):
        return len(self.pawns)


def violations(board: Board) -> list[tuple[Cell, Cell]]:
    """All attacking pairs ``(p, q)`` with ``p < q`` in row-major order."""
    out = []
    for p in board.sorted_pawns():
        # q > p and attacking means q is in the next row
        for dc in (-1, 1):
            q = Cell(p.row + 1, p.col + dc)
            if q in board.pawns:
                out.append((p, q))
    return out


def is_independent(board: Board) -> bool:
    return not violations(board)


def render_ascii(board: Board) -> str:
    grid = [["."] * board.cols for _ in range(board.rows)]
    for r, c in board.pawns:
        grid[r - 1][c - 1] = "P"
    return "".join("".join(line) + "\n" for line in grid)


def parse_ascii(text: str) -> Board:
    """Inverse of :func:`render_ascii`."""
    lines = text.splitlines()
    if not lines:
        raise MalformedBoardError("empty board diagram")
    cols = len(lines[0])
    pawns = []
    for r, line in enumerate(lines, 1):
        if len(line) != cols:
            raise MalformedBoardError(f"row {r} has length {len(line)}, expected {cols}")
        for c, ch in enumerate(line, 1):
            if ch == "P":
                pawns.append(Cell(r, c))
            elif ch != ".":
                raise MalformedBoardError(f"unexpected character {ch!r} at ({r},{c})")
    return Board(len(lines), cols, frozenset(pawns))


def to_json(board: Board) -> str:
    payload = {"rows": board.rows, "cols": board.cols,
               "pawns": [[r, c] for r, c in board.sorted_pawns()]}
    return json.dumps(payload, separators=(",", ":"))


def from_json(text: str) -> Board:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedBoardError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"rows", "cols", "pawns"}:
        raise MalformedBoardError('expected object with keys "rows", "cols", "pawns"')
    pawns = data["pawns"]
    if not isinstance(pawns, list):
        raise MalformedBoardError('"pawns" must be a list')
    cells = []
    for item in pawns:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)):
            raise MalformedBoardError(f"pawn entry {item!r} is not an integer pair")
        cells.append(Cell(*item))
    return Board(data["rows"], data["cols"], cells)


def load_board(text: str) -> Board:
    """Parse either the JSON or the ASCII board format."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse_ascii(text)

from itertools import combinations

import pytest

from maxpawns.board import Board, Cell


def naive_max_arrangements(rows, cols):
    """Largest independent pawn sets by trying every cell subset, biggest first.

    Written without bitmasks or row structure so it can referee the DP.
    """
    cells = [Cell(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    for k in range(len(cells), -1, -1):
        found = []
        for combo in combinations(cells, k):
            chosen = set(combo)
            if all((r + 1, c - 1) not in chosen and (r + 1, c + 1) not in chosen
                   for r, c in combo):
                found.append(Board(rows, cols, frozenset(combo)))
        if found:
            return k, found


@pytest.fixture(scope="session")
def naive():
    cache = {}

    def run(rows, cols):
        if (rows, cols) not in cache:
            cache[rows, cols] = naive_max_arrangements(rows, cols)
        return cache[rows, cols]

    return run

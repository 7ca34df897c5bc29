"""Admissible distance heuristics for sliding-tile boards.

Both functions never exceed the true solution length, so iterative
deepening on f = g + h stays optimal. The raw-table helpers operate on
0-based cell lists and are shared with the search core, which updates
them incrementally.
"""

from __future__ import annotations

from functools import lru_cache

from .board import Board

__all__ = ["manhattan", "linear_conflict"]


@lru_cache(maxsize=None)
def goal_tables(width: int, height: int):
    """Per-dimension lookup tables, 0-based cells, labels 1..n (n = blank).

    Returns (md, goal_row, goal_col) where md[label][cell] is the taxicab
    distance from ``cell`` to the label's home. The blank's rows are zero
    / -1 sentinels so it never contributes.
    """
    n = width * height
    md = [[0] * n for _ in range(n + 1)]
    goal_row = [-1] * (n + 1)
    goal_col = [-1] * (n + 1)
    for label in range(1, n):
        gr, gc = divmod(label - 1, width)
        goal_row[label] = gr
        goal_col[label] = gc
        row = md[label]
        for cell in range(n):
            r, c = divmod(cell, width)
            row[cell] = abs(r - gr) + abs(c - gc)
    return md, goal_row, goal_col


def manhattan(board: Board) -> int:
    """Sum of every non-blank tile's taxicab distance to its home cell."""
    md, _, _ = goal_tables(board.width, board.height)
    return sum(md[label][cell] for cell, label in enumerate(board.cells))


def _sorted_stay(goal_coords: list[int]) -> int:
    """Longest subsequence already in increasing goal order."""
    best = [0] * len(goal_coords)
    for i, g in enumerate(goal_coords):
        longest = 0
        for j in range(i):
            if goal_coords[j] < g and best[j] > longest:
                longest = best[j]
        best[i] = longest + 1
    return max(best, default=0)


def row_conflicts(tiles, width: int, row: int, goal_row, goal_col) -> int:
    """2 x (tiles that must leave ``row`` so the rest can slide home).

    Considers only tiles whose home is in this row; the minimum number of
    leavers is the row's population minus its longest already-ordered
    subsequence, and each leaver costs two extra vertical moves.
    """
    base = row * width
    coords = [
        goal_col[t]
        for t in tiles[base : base + width]
        if goal_row[t] == row
    ]
    if len(coords) < 2:
        return 0
    return 2 * (len(coords) - _sorted_stay(coords))


def col_conflicts(tiles, width: int, n: int, col: int, goal_row, goal_col) -> int:
    """Column counterpart of :func:`row_conflicts`."""
    coords = [
        goal_row[t]
        for t in tiles[col:n:width]
        if goal_col[t] == col
    ]
    if len(coords) < 2:
        return 0
    return 2 * (len(coords) - _sorted_stay(coords))


def linear_conflict(board: Board) -> int:
    """Manhattan distance plus 2 per tile forced out of its goal row/column.

    Tiles sharing their goal line in reversed order cannot pass each other
    inside the line, so for each line the minimum number of tiles that
    must detour adds two moves apiece. Equals :func:`manhattan` when no
    goal line holds two of its own tiles out of order.
    """
    md, goal_row, goal_col = goal_tables(board.width, board.height)
    tiles = board.cells
    n = board.size
    total = sum(md[label][cell] for cell, label in enumerate(tiles))
    for r in range(board.height):
        total += row_conflicts(tiles, board.width, r, goal_row, goal_col)
    for c in range(board.width):
        total += col_conflicts(tiles, board.width, n, c, goal_row, goal_col)
    return total

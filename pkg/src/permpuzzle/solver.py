"""Optimal solvers: an exact BFS oracle for small boards and IDA* search.

IDA* runs depth-first with an f = g + h threshold raised to the smallest
overflowing value each iteration; with the admissible heuristics offered
here the first solution found is optimal. Move ordering is fixed (blank
U, D, L, R) and the inverse of the previous move is pruned, so node
counts are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .board import MOVE_ORDER, Board, Move, move_targets
from .errors import PuzzleError, ResourceLimitError, UnsolvableError
from .heuristics import col_conflicts, goal_tables, row_conflicts
from .pattern_db import PatternDatabase, PatternHeuristic
from .solvability import certificate

__all__ = [
    "SearchLimits",
    "SearchResult",
    "HEURISTIC_NAMES",
    "bfs_optimal",
    "ida_star",
]

# Named heuristics usable without prebuilt tables.
HEURISTIC_NAMES = ("manhattan", "linear-conflict")

# Expansion ceiling applied to BFS when no explicit limit is given;
# admits every board with up to 9 cells.
DEFAULT_BFS_MAX_NODES = 1_000_000

_INF = 1 << 30
_INVERSE_DIR = (1, 0, 3, 2)


@dataclass(frozen=True, slots=True)
class SearchLimits:
    """Optional ceilings; hitting one aborts with a resource error."""

    max_nodes: int | None = None
    max_time: float | None = None
    max_depth: int | None = None


@dataclass(frozen=True, slots=True)
class SearchResult:
    moves: tuple[Move, ...]
    nodes_expanded: int
    elapsed: float

    @property
    def length(self) -> int:
        return len(self.moves)


def _require_solvable(board: Board):
    cert = certificate(board)
    if not cert.solvable:
        raise UnsolvableError(
            "goal unreachable: configuration parity "
            f"{cert.config_parity} vs blank parity {cert.blank_parity}",
            certificate=cert,
        )


def bfs_optimal(board: Board, limits: SearchLimits | None = None) -> SearchResult:
    """Minimum-length solution by breadth-first search from ``board``.

    The exact oracle: feasible only for small boards (default ceiling of
    one million expansions covers everything up to 9 cells).
    """
    limits = limits or SearchLimits()
    t0 = time.perf_counter()
    _require_solvable(board)
    if board.is_goal():
        return SearchResult((), 0, time.perf_counter() - t0)

    n = board.size
    if n > 16:
        raise ResourceLimitError(f"BFS oracle supports at most 16 cells, got {n}")
    node_cap = limits.max_nodes if limits.max_nodes is not None else DEFAULT_BFS_MAX_NODES
    deadline = t0 + limits.max_time if limits.max_time is not None else None

    targets = move_targets(board.width, board.height)
    start = 0
    for cell, label in enumerate(board.cells):
        start |= (label - 1) << (4 * cell)
    goal = 0
    for cell in range(n):
        goal |= cell << (4 * cell)
    blank_nibble = n - 1

    parents: dict[int, tuple[int, int] | None] = {start: None}
    frontier = [(start, board.blank_index - 1)]
    nodes = 0
    depth = 0
    found = None
    while frontier and found is None:
        if limits.max_depth is not None and depth >= limits.max_depth:
            raise ResourceLimitError(
                f"no solution within depth {limits.max_depth}",
                nodes_expanded=nodes,
            )
        next_frontier = []
        for state, blank in frontier:
            nodes += 1
            if nodes > node_cap:
                raise ResourceLimitError(
                    f"BFS exceeded {node_cap} expansions", nodes_expanded=nodes
                )
            if deadline is not None and not nodes & 4095 and time.perf_counter() > deadline:
                raise ResourceLimitError(
                    f"BFS exceeded {limits.max_time}s", nodes_expanded=nodes
                )
            base = blank * 4  # stride-4 into both the move table and the nibbles
            for d in range(4):
                target = targets[base + d]
                if target < 0:
                    continue
                tshift = target * 4
                tile = (state >> tshift) & 15
                delta = tile ^ blank_nibble
                child = state ^ (delta << tshift) ^ (delta << base)
                if child in parents:
                    continue
                parents[child] = (state, d)
                if child == goal:
                    found = child
                    break
                next_frontier.append((child, target))
            if found is not None:
                break
        frontier = next_frontier
        depth += 1

    if found is None:
        # Unreachable: solvability was checked up front.
        raise PuzzleError("BFS exhausted the component without finding the goal")
    dirs = []
    state = found
    while parents[state] is not None:
        state, d = parents[state]
        dirs.append(d)
    dirs.reverse()
    moves = tuple(MOVE_ORDER[d] for d in dirs)
    return SearchResult(moves, nodes, time.perf_counter() - t0)


def _resolve_heuristic(heuristic, board: Board):
    """Map the heuristic argument to (mode, pattern heuristic or None)."""
    if isinstance(heuristic, str):
        name = heuristic.lower().replace("_", "-")
        if name == "manhattan":
            return 0, None
        if name == "linear-conflict":
            return 1, None
        raise ValueError(
            f"unknown heuristic {heuristic!r}; named options: {HEURISTIC_NAMES}"
        )
    if isinstance(heuristic, PatternHeuristic):
        ph = heuristic
    elif isinstance(heuristic, PatternDatabase):
        ph = PatternHeuristic([heuristic])
    else:
        try:
            ph = PatternHeuristic(list(heuristic))
        except TypeError:
            raise ValueError(
                "heuristic must be a name, a PatternDatabase, a list of them, "
                "or a PatternHeuristic"
            ) from None
    if (ph.width, ph.height) != (board.width, board.height):
        raise ValueError(
            f"heuristic is for {ph.width}x{ph.height}, "
            f"board is {board.width}x{board.height}"
        )
    return 2, ph


def ida_star(
    board: Board,
    heuristic="linear-conflict",
    limits: SearchLimits | None = None,
) -> SearchResult:
    """Optimal solve by iterative-deepening A*.

    ``heuristic`` is a name from :data:`HEURISTIC_NAMES`, or pattern
    database(s) (pairwise disjoint) for an additive table-driven bound.
    Unsolvable boards are rejected via the O(n) parity certificate before
    any node is expanded.
    """
    limits = limits or SearchLimits()
    t0 = time.perf_counter()
    mode, pheur = _resolve_heuristic(heuristic, board)
    _require_solvable(board)
    if board.is_goal():
        return SearchResult((), 0, time.perf_counter() - t0)

    w = board.width
    n = board.size
    md, goal_row, goal_col = goal_tables(w, board.height)
    targets = move_targets(w, board.height)
    tiles = list(board.cells)
    blank0 = board.blank_index - 1
    position = [0] * (n + 1)
    for cell, label in enumerate(tiles):
        position[label] = cell
    goal_tiles = list(range(1, n + 1))

    if mode == 2:
        h0 = pheur.value_from_positions(position)
    else:
        h0 = sum(md[t][c] for c, t in enumerate(tiles))
        if mode == 1:
            for r in range(board.height):
                h0 += row_conflicts(tiles, w, r, goal_row, goal_col)
            for c in range(w):
                h0 += col_conflicts(tiles, w, n, c, goal_row, goal_col)

    node_cap = limits.max_nodes
    deadline = t0 + limits.max_time if limits.max_time is not None else None
    max_depth = limits.max_depth
    nodes = 0
    path: list[int] = []

    def lc_affected(t: int, j: int, z: int) -> int:
        """Conflict total over the lines a move of tile t between cells
        j and z can change, evaluated on the current ``tiles``."""
        s = 0
        rz, cz = divmod(z, w)
        rj, cj = divmod(j, w)
        gr = goal_row[t]
        gc = goal_col[t]
        if cz == cj:
            if gr == rj:
                s += row_conflicts(tiles, w, rj, goal_row, goal_col)
            if gr == rz:
                s += row_conflicts(tiles, w, rz, goal_row, goal_col)
            if gc == cj:
                s += col_conflicts(tiles, w, n, cj, goal_row, goal_col)
        else:
            if gc == cj:
                s += col_conflicts(tiles, w, n, cj, goal_row, goal_col)
            if gc == cz:
                s += col_conflicts(tiles, w, n, cz, goal_row, goal_col)
            if gr == rj:
                s += row_conflicts(tiles, w, rj, goal_row, goal_col)
        return s

    def dfs(blank: int, g: int, bound: int, skip: int, h: int) -> int:
        """Returns -1 when the goal was reached (path holds the moves),
        else the smallest f that overflowed the bound."""
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise ResourceLimitError(
                f"IDA* exceeded {node_cap} expansions", nodes_expanded=nodes
            )
        if deadline is not None and not nodes & 2047 and time.perf_counter() > deadline:
            raise ResourceLimitError(
                f"IDA* exceeded {limits.max_time}s", nodes_expanded=nodes
            )
        mn = _INF
        base = blank * 4
        g1 = g + 1
        for d in range(4):
            if d == skip:
                continue
            j = targets[base + d]
            if j < 0:
                continue
            t = tiles[j]
            if mode == 0:
                child_h = h + md[t][blank] - md[t][j]
                f = g1 + child_h
                if f > bound:
                    if f < mn:
                        mn = f
                    continue
                tiles[blank] = t
                tiles[j] = n
                path.append(d)
                if child_h == 0:
                    return -1
                r = dfs(j, g1, bound, _INVERSE_DIR[d], child_h)
                if r < 0:
                    return -1
                if r < mn:
                    mn = r
                path.pop()
                tiles[j] = t
                tiles[blank] = n
            elif mode == 1:
                before = lc_affected(t, j, blank)
                tiles[blank] = t
                tiles[j] = n
                child_h = h + md[t][blank] - md[t][j] + lc_affected(t, j, blank) - before
                f = g1 + child_h
                if f > bound:
                    if f < mn:
                        mn = f
                else:
                    path.append(d)
                    if child_h == 0:
                        return -1
                    r = dfs(j, g1, bound, _INVERSE_DIR[d], child_h)
                    if r < 0:
                        return -1
                    if r < mn:
                        mn = r
                    path.pop()
                tiles[j] = t
                tiles[blank] = n
            else:
                tiles[blank] = t
                tiles[j] = n
                position[t] = blank
                child_h = pheur.value_from_positions(position)
                f = g1 + child_h
                if f > bound:
                    if f < mn:
                        mn = f
                else:
                    path.append(d)
                    if child_h == 0 and tiles == goal_tiles:
                        return -1
                    r = dfs(j, g1, bound, _INVERSE_DIR[d], child_h)
                    if r < 0:
                        return -1
                    if r < mn:
                        mn = r
                    path.pop()
                position[t] = j
                tiles[j] = t
                tiles[blank] = n
        return mn

    bound = h0
    while True:
        if max_depth is not None and bound > max_depth:
            raise ResourceLimitError(
                f"no solution within depth {max_depth}", nodes_expanded=nodes
            )
        r = dfs(blank0, 0, bound, -1, h0)
        if r < 0:
            moves = tuple(MOVE_ORDER[d] for d in path)
            return SearchResult(moves, nodes, time.perf_counter() - t0)
        if r >= _INF:
            raise PuzzleError("IDA* exhausted the space without a solution")
        bound = r

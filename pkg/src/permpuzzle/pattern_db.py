"""Disjoint additive pattern databases.

A database stores, for every placement of a chosen tile subset, the
minimum number of *pattern-tile* moves needed to bring those tiles home
(blank and non-pattern moves are free). Databases over disjoint tile
sets may therefore be summed and remain a lower bound on the true
solution length.

File format (little-endian): magic ``SPDB``, version byte 1, width byte,
height byte, pattern-size byte k, k ascending tile-label bytes, an 8-byte
unsigned table length L, then L distance bytes indexed by the
lexicographic rank of the pattern tiles' cell assignment (an ordered
k-selection out of the n cells).
"""

from __future__ import annotations

import math
import os
import struct
from collections import deque
from dataclasses import dataclass

from .board import Board, move_targets
from .errors import ParseError, ResourceLimitError

__all__ = [
    "PatternDatabase",
    "PatternHeuristic",
    "build_pdb",
    "pdb_heuristic",
    "save_pdb",
    "load_pdb",
]

MAGIC = b"SPDB"
VERSION = 1
MAX_PATTERN_TILES = 8
UNREACHED = 0xFF

# Ceiling on (placements x blank positions) explored during a build.
DEFAULT_MAX_STATES = 20_000_000


def rank_weights(n: int, k: int) -> tuple[int, ...]:
    """Mixed-radix weights for ranking ordered k-selections of n cells."""
    return tuple(math.perm(n - 1 - i, k - 1 - i) for i in range(k))


def rank_of_cells(cells, weights) -> int:
    """Lexicographic rank of a sequence of distinct cells."""
    r = 0
    for i, c in enumerate(cells):
        smaller = 0
        for j in range(i):
            if cells[j] < c:
                smaller += 1
        r += (c - smaller) * weights[i]
    return r


@dataclass(frozen=True)
class PatternDatabase:
    """Admissible distance table for one tile subset on one board size."""

    width: int
    height: int
    pattern_tiles: tuple[int, ...]
    table: bytes

    def __post_init__(self):
        n = self.width * self.height
        k = len(self.pattern_tiles)
        if list(self.pattern_tiles) != sorted(set(self.pattern_tiles)):
            raise ValueError("pattern tiles must be distinct and ascending")
        if k < 1 or k > MAX_PATTERN_TILES:
            raise ValueError(
                f"pattern size must be 1..{MAX_PATTERN_TILES}, got {k}"
            )
        if self.pattern_tiles[0] < 1 or self.pattern_tiles[-1] > n - 1:
            raise ValueError("pattern tiles must be non-blank labels 1..n-1")
        if len(self.table) != math.perm(n, k):
            raise ValueError(
                f"table holds {len(self.table)} entries, "
                f"expected {math.perm(n, k)}"
            )

    @property
    def size(self) -> int:
        return self.width * self.height

    def lookup(self, board: Board) -> int:
        """Lower bound on moves of this pattern's tiles for ``board``."""
        if (board.width, board.height) != (self.width, self.height):
            raise ValueError(
                f"database is for {self.width}x{self.height}, "
                f"board is {board.width}x{board.height}"
            )
        position = {label: cell for cell, label in enumerate(board.cells)}
        weights = rank_weights(self.size, len(self.pattern_tiles))
        cells = [position[t] for t in self.pattern_tiles]
        return self.table[rank_of_cells(cells, weights)]


def build_pdb(
    width: int,
    height: int,
    pattern_tiles,
    *,
    max_states: int = DEFAULT_MAX_STATES,
) -> PatternDatabase:
    """Exhaustive backward search from the goal over (placement, blank).

    Moving the blank across a non-pattern tile costs nothing; moving it
    across a pattern tile costs one. A 0/1-cost BFS therefore settles
    states in nondecreasing distance order, and the first time a
    placement is settled (at any blank position) gives its table entry.
    Placements never reached keep 0xFF; they cannot occur in a position
    reachable from the goal.
    """
    tiles = tuple(sorted(pattern_tiles))
    n = width * height
    k = len(tiles)
    if len(set(tiles)) != k:
        raise ValueError("pattern tiles must be distinct")
    if k < 1 or k > MAX_PATTERN_TILES:
        raise ValueError(f"pattern size must be 1..{MAX_PATTERN_TILES}, got {k}")
    if tiles[0] < 1 or tiles[-1] > n - 1:
        raise ValueError("pattern tiles must be non-blank labels 1..n-1")

    table_len = math.perm(n, k)
    state_estimate = table_len * (n - k)
    if state_estimate > max_states:
        raise ResourceLimitError(
            f"pattern build needs ~{state_estimate} states, "
            f"over the {max_states} ceiling"
        )

    weights = rank_weights(n, k)
    targets = move_targets(width, height)
    table = bytearray([UNREACHED]) * table_len

    goal_cells = tuple(t - 1 for t in tiles)
    start = (n - 1, goal_cells)
    best = {start: 0}
    queue = deque([(0, n - 1, goal_cells)])
    while queue:
        dist, blank, cells = queue.popleft()
        key = (blank, cells)
        if dist > best[key]:
            continue
        r = rank_of_cells(cells, weights)
        if table[r] == UNREACHED:
            table[r] = min(dist, 0xFE)
        base = blank * 4
        for d in range(4):
            dest = targets[base + d]
            if dest < 0:
                continue
            if dest in cells:
                # A pattern tile slides into the blank: cost 1.
                i = cells.index(dest)
                child_cells = cells[:i] + (blank,) + cells[i + 1 :]
                child = (dest, child_cells)
                nd = dist + 1
                if nd < best.get(child, UNREACHED + 1):
                    best[child] = nd
                    queue.append((nd, dest, child_cells))
            else:
                # Only the blank (or an anonymous tile) moves: cost 0.
                child = (dest, cells)
                if dist < best.get(child, UNREACHED + 1):
                    best[child] = dist
                    queue.appendleft((dist, dest, cells))
    return PatternDatabase(width, height, tiles, bytes(table))


class PatternHeuristic:
    """Sum of disjoint pattern databases, reusable across solves."""

    def __init__(self, databases):
        databases = list(databases)
        if not databases:
            raise ValueError("at least one pattern database required")
        dims = {(db.width, db.height) for db in databases}
        if len(dims) != 1:
            raise ValueError(f"databases built for mixed dimensions {sorted(dims)}")
        covered: set[int] = set()
        for db in databases:
            overlap = covered & set(db.pattern_tiles)
            if overlap:
                raise ValueError(
                    f"patterns overlap on tiles {sorted(overlap)}; "
                    "additivity requires disjoint patterns"
                )
            covered |= set(db.pattern_tiles)
        self.databases = tuple(databases)
        self.width, self.height = dims.pop()
        n = self.width * self.height
        self._prepared = tuple(
            (db.pattern_tiles, rank_weights(n, len(db.pattern_tiles)), db.table)
            for db in databases
        )

    def value_from_positions(self, position) -> int:
        """Heuristic from a label -> 0-based cell array (solver hot path)."""
        total = 0
        for tiles, weights, table in self._prepared:
            r = 0
            i = 0
            cells = [position[t] for t in tiles]
            for c in cells:
                smaller = 0
                for j in range(i):
                    if cells[j] < c:
                        smaller += 1
                r += (c - smaller) * weights[i]
                i += 1
            total += table[r]
        return total

    def __call__(self, board: Board) -> int:
        if (board.width, board.height) != (self.width, self.height):
            raise ValueError(
                f"heuristic is for {self.width}x{self.height}, "
                f"board is {board.width}x{board.height}"
            )
        position = [0] * (board.size + 1)
        for cell, label in enumerate(board.cells):
            position[label] = cell
        return self.value_from_positions(position)


def pdb_heuristic(board: Board, databases) -> int:
    """Summed lookup across pairwise-disjoint databases; admissible."""
    return PatternHeuristic(databases)(board)


def save_pdb(db: PatternDatabase, destination) -> None:
    """Write the bit-exact on-disk form; ``load_pdb`` inverts it."""
    header = struct.pack(
        "<4sBBBB", MAGIC, VERSION, db.width, db.height, len(db.pattern_tiles)
    )
    payload = (
        header
        + bytes(db.pattern_tiles)
        + struct.pack("<Q", len(db.table))
        + db.table
    )
    with open(os.fspath(destination), "wb") as fh:
        fh.write(payload)


def load_pdb(source) -> PatternDatabase:
    with open(os.fspath(source), "rb") as fh:
        data = fh.read()
    if len(data) < 8 or data[:4] != MAGIC:
        raise ParseError("not a pattern database: bad magic")
    version = data[4]
    if version != VERSION:
        raise ParseError(f"unsupported pattern database version {version}")
    width, height, k = data[5], data[6], data[7]
    offset = 8
    if len(data) < offset + k + 8:
        raise ParseError("truncated pattern database header")
    tiles = tuple(data[offset : offset + k])
    offset += k
    (table_len,) = struct.unpack_from("<Q", data, offset)
    offset += 8
    expected = math.perm(width * height, k) if k <= width * height else -1
    if table_len != expected:
        raise ParseError(
            f"table length {table_len} does not match "
            f"{width}x{height} pattern of size {k}"
        )
    table = data[offset : offset + table_len]
    if len(table) != table_len:
        raise ParseError(
            f"truncated table: expected {table_len} bytes, got {len(table)}"
        )
    if len(data) > offset + table_len:
        raise ParseError("trailing bytes after table")
    try:
        return PatternDatabase(width, height, tiles, table)
    except ValueError as exc:
        raise ParseError(f"invalid pattern database: {exc}") from None

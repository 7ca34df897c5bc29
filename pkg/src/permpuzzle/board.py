"""Sliding-puzzle boards, legal moves, and the bridge to permutations.

A board is a width x height grid holding tile labels 1..n exactly once,
where n = width*height is the blank. Externally the blank is written as
``0`` (or ``_`` on input). A move names the direction the *blank*
travels; the slid tile moves the opposite way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .errors import IllegalMoveError, ParseError
from .perm import Permutation

__all__ = [
    "Move",
    "MOVE_ORDER",
    "Board",
    "scramble",
    "parse_moves",
    "format_moves",
]


class Move(Enum):
    """Direction the blank travels (the slid tile moves opposite)."""

    UP = "U"
    DOWN = "D"
    LEFT = "L"
    RIGHT = "R"

    @property
    def inverse(self) -> "Move":
        return _INVERSE[self]

    @classmethod
    def from_token(cls, token: str) -> "Move":
        try:
            return cls(token)
        except ValueError:
            raise ParseError(f"invalid move token {token!r}; expected U, D, L or R") from None


# Canonical move ordering used everywhere search determinism matters.
MOVE_ORDER: tuple[Move, ...] = (Move.UP, Move.DOWN, Move.LEFT, Move.RIGHT)

_INVERSE = {
    Move.UP: Move.DOWN,
    Move.DOWN: Move.UP,
    Move.LEFT: Move.RIGHT,
    Move.RIGHT: Move.LEFT,
}

_BLANK_TOKENS = ("0", "_")


@lru_cache(maxsize=None)
def move_targets(width: int, height: int) -> tuple[int, ...]:
    """Flat table: entry [cell*4 + d] is the blank's destination cell for
    direction index d (order U, D, L, R), or -1 when the move is illegal.
    Cells are 0-based row-major."""
    n = width * height
    table = []
    for cell in range(n):
        row, col = divmod(cell, width)
        table.append(cell - width if row > 0 else -1)
        table.append(cell + width if row < height - 1 else -1)
        table.append(cell - 1 if col > 0 else -1)
        table.append(cell + 1 if col < width - 1 else -1)
    return tuple(table)


@dataclass(frozen=True, slots=True)
class Board:
    """Immutable puzzle state; ``cells`` is row-major, blank stored as label n."""

    width: int
    height: int
    cells: tuple[int, ...]
    blank_index: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.width < 2 or self.height < 2:
            raise ValueError("board dimensions must be at least 2x2")
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        n = self.width * self.height
        if len(cells) != n:
            raise ValueError(f"expected {n} cells, got {len(cells)}")
        seen = bytearray(n + 1)
        for v in cells:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"tile label {v!r} outside 1..{n}")
            if seen[v]:
                raise ValueError(f"tile label {v} appears twice")
            seen[v] = 1
        # 1-based position of the blank, kept in sync by construction.
        object.__setattr__(self, "blank_index", cells.index(n) + 1)

    @property
    def size(self) -> int:
        return self.width * self.height

    # ------------------------------------------------------------------
    # Construction and text format
    # ------------------------------------------------------------------

    @classmethod
    def goal(cls, width: int, height: int) -> "Board":
        """The solved board: tiles 1..n-1 in order, blank last."""
        return cls(width, height, tuple(range(1, width * height + 1)))

    @classmethod
    def parse(cls, text: str) -> "Board":
        """Parse rows of whitespace-separated tiles; blank written 0 or _."""
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if not rows:
            raise ParseError("empty board")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ParseError(
                    f"ragged rows: expected {width} columns, got {len(row)}"
                )
        height = len(rows)
        if width < 2 or height < 2:
            raise ParseError("board must be at least 2x2")
        n = width * height
        cells = []
        seen = bytearray(n + 1)
        blank_seen = False
        for tok in (tok for row in rows for tok in row):
            if tok in _BLANK_TOKENS:
                if seen[n]:
                    raise ParseError("more than one blank")
                seen[n] = 1
                blank_seen = True
                cells.append(n)
                continue
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"invalid tile {tok!r}") from None
            # The blank's internal label n is tolerated here so that a
            # board written without any 0/_ reports the missing blank.
            if not 1 <= v <= n:
                raise ParseError(f"tile {v} outside 1..{n - 1}")
            if seen[v]:
                raise ParseError(f"duplicate tile {v}")
            seen[v] = 1
            cells.append(v)
        if not blank_seen:
            raise ParseError("missing blank (0 or _)")
        return cls(width, height, tuple(cells))

    def format(self) -> str:
        """Inverse of :meth:`parse`; the blank is emitted as ``0``."""
        n = self.size
        lines = []
        for r in range(self.height):
            row = self.cells[r * self.width : (r + 1) * self.width]
            lines.append(" ".join("0" if v == n else str(v) for v in row))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()

    # ------------------------------------------------------------------
    # Permutation bridge
    # ------------------------------------------------------------------

    def to_permutation(self) -> Permutation:
        """The position -> tile mapping; the solved board is the identity."""
        return Permutation(self.cells)

    @classmethod
    def from_permutation(cls, p: Permutation, width: int, height: int) -> "Board":
        if p.degree != width * height:
            raise ValueError(
                f"degree {p.degree} does not match {width}x{height} board"
            )
        return cls(width, height, p.images)

    # ------------------------------------------------------------------
    # Moves
    # ------------------------------------------------------------------

    def is_goal(self) -> bool:
        return self.cells == tuple(range(1, self.size + 1))

    def _target(self, move: Move) -> int:
        """0-based destination cell of the blank, or -1 if illegal."""
        d = MOVE_ORDER.index(move)
        return move_targets(self.width, self.height)[(self.blank_index - 1) * 4 + d]

    def legal_moves(self) -> set[Move]:
        """The 2-4 directions the blank may travel from here."""
        targets = move_targets(self.width, self.height)
        base = (self.blank_index - 1) * 4
        return {m for d, m in enumerate(MOVE_ORDER) if targets[base + d] >= 0}

    def apply_move(self, move: Move) -> "Board":
        """Slide the adjacent tile into the blank; blank travels ``move``."""
        target = self._target(move)
        if target < 0:
            raise IllegalMoveError(
                f"blank cannot travel {move.name}: already at that edge",
                move=move,
            )
        cells = list(self.cells)
        blank = self.blank_index - 1
        cells[blank], cells[target] = cells[target], cells[blank]
        return Board(self.width, self.height, tuple(cells))

    def move_transposition(self, move: Move) -> Permutation:
        """The 2-cycle of tile labels (blank, slid tile) realizing ``move``.

        Left-composing it onto ``to_permutation`` yields the moved board's
        permutation.
        """
        target = self._target(move)
        if target < 0:
            raise IllegalMoveError(
                f"blank cannot travel {move.name}: already at that edge",
                move=move,
            )
        n = self.size
        return Permutation.transposition(n, n, self.cells[target])

    def apply_sequence(self, moves) -> "Board":
        """Left-to-right fold of apply_move; flags the first illegal step."""
        board = self
        for k, move in enumerate(moves):
            try:
                board = board.apply_move(move)
            except IllegalMoveError as exc:
                raise IllegalMoveError(
                    f"illegal move at index {k}: {exc}", move=move, index=k
                ) from None
        return board


def scramble(
    width: int, height: int, steps: int, rng_seed: int
) -> tuple[Board, list[Move]]:
    """Walk ``steps`` random legal moves from the goal, never immediately
    undoing the previous move. Deterministic for a fixed seed; the result
    is solvable by construction and the returned sequence is a witness."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(rng_seed)
    board = Board.goal(width, height)
    targets = move_targets(width, height)
    moves: list[Move] = []
    previous: Move | None = None
    for _ in range(steps):
        base = (board.blank_index - 1) * 4
        candidates = [
            m
            for d, m in enumerate(MOVE_ORDER)
            if targets[base + d] >= 0
            and (previous is None or m is not previous.inverse)
        ]
        move = rng.choice(candidates)
        board = board.apply_move(move)
        moves.append(move)
        previous = move
    return board, moves


def parse_moves(text: str) -> list[Move]:
    """Parse whitespace-separated U/D/L/R tokens."""
    return [Move.from_token(tok) for tok in text.split()]


def format_moves(moves) -> str:
    return " ".join(m.value for m in moves)

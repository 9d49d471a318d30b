"""Immutable board state and the rules of Square War.

The five rules: a 19x19 grid of intersections (size configurable, odd and
at least 7); two players, Black first, alternating; stones go on empty
intersections and are never removed; Black's second stone must be
orthogonally adjacent to Black's first; the first side whose stones form
all four vertices of an axis-aligned square wins immediately.

``Board`` is a value: ``place`` returns a successor and never mutates, so
boards can be shared freely across threads and sessions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .coords import (
    Color,
    Coord,
    DEFAULT_SIZE,
    format_coord,
    in_bounds,
    parse_coord,
)
from .errors import (
    GameOver,
    Occupied,
    OutOfBounds,
    Rule4Violation,
)
from .geometry import Square


@dataclass(frozen=True)
class GameStatus:
    winner: Optional[Color] = None
    square: Optional[Square] = None
    winning_stone: Optional[int] = None

    @property
    def is_over(self) -> bool:
        return self.winner is not None


IN_PROGRESS = GameStatus()


@dataclass(frozen=True)
class Board:
    size: int
    grid: tuple  # length size*size, entries Color or None, index row*size+col
    history: tuple  # ((Coord, Color), ...) in play order
    status: GameStatus = field(default=IN_PROGRESS)

    @classmethod
    def empty(cls, size: int = DEFAULT_SIZE) -> "Board":
        if size < 7 or size % 2 == 0:
            raise ValueError("board size must be odd and at least 7")
        return cls(size=size, grid=(None,) * (size * size), history=())

    def stone_at(self, c: Coord) -> Optional[Color]:
        return self.grid[c.row * self.size + c.col]

    @property
    def to_move(self) -> Optional[Color]:
        if self.status.is_over:
            return None
        return Color.BLACK if len(self.history) % 2 == 0 else Color.WHITE

    def stones(self, color: Color) -> tuple[Coord, ...]:
        """Stones of one color in play order."""
        return tuple(c for c, col in self.history if col is color)

    def empties(self) -> list[Coord]:
        out = []
        for row in range(self.size):
            base = row * self.size
            for col in range(self.size):
                if self.grid[base + col] is None:
                    out.append(Coord(col, row))
        return out

    def place(self, at: Coord) -> "Board":
        """Play the next stone at ``at``; color follows from the turn order.

        Raises GameOver, OutOfBounds, Occupied, or Rule4Violation.  The
        successor's status is recomputed from the placed stone only, which
        is sound because a new square must use the new stone.
        """
        if self.status.is_over:
            raise GameOver("the game is already decided")
        if not in_bounds(at, self.size):
            raise OutOfBounds(f"{at} is off the {self.size}x{self.size} board")
        idx = at.row * self.size + at.col
        if self.grid[idx] is not None:
            raise Occupied(f"{format_coord(at)} is occupied")
        color = Color.BLACK if len(self.history) % 2 == 0 else Color.WHITE
        if color is Color.BLACK and len(self.history) == 2:
            first = self.history[0][0]
            if abs(first.col - at.col) + abs(first.row - at.row) != 1:
                raise Rule4Violation(
                    "Black's second stone must touch Black's first stone"
                )
        grid = list(self.grid)
        grid[idx] = color
        nxt = Board(
            size=self.size,
            grid=tuple(grid),
            history=self.history + ((at, color),),
        )
        sq = completed_square(nxt, at, color)
        if sq is not None:
            nxt = replace(
                nxt,
                status=GameStatus(
                    winner=color, square=sq, winning_stone=len(nxt.history)
                ),
            )
        return nxt


def completed_square(board: Board, at: Coord, color: Color) -> Optional[Square]:
    """The first square through ``at`` whose four corners all hold ``color``,
    scanning sides ascending then corners row-major; None if there is none.

    Equivalent to filtering squares_through(at), written as flat index
    arithmetic because it runs on every placement.
    """
    n = board.size
    grid = board.grid
    ac, ar = at
    # no anchor fits once the side exceeds every corner-role reach
    max_side = max(ac, ar, n - 1 - ac, n - 1 - ar)
    for side in range(1, max_side + 1):
        for r0 in (ar - side, ar):
            if r0 < 0 or r0 + side >= n:
                continue
            base = r0 * n
            top = base + side * n
            for c0 in (ac - side, ac):
                if c0 < 0 or c0 + side >= n:
                    continue
                if (
                    grid[base + c0] is color
                    and grid[base + c0 + side] is color
                    and grid[top + c0] is color
                    and grid[top + c0 + side] is color
                ):
                    return Square(Coord(c0, r0), side)
    return None


def winning_points(board: Board, color: Color) -> frozenset[Coord]:
    """Every empty point that would complete a square for ``color``.

    Any three corners of a square include two corners sharing a square
    edge, i.e. two stones on one grid line at distance equal to the side,
    so scanning aligned same-color pairs finds every completion point.
    """
    n = board.size
    grid = board.grid
    stones = board.stones(color)
    out: set[Coord] = set()
    for i in range(len(stones) - 1):
        p = stones[i]
        for j in range(i + 1, len(stones)):
            q = stones[j]
            if p.row == q.row:
                d = abs(p.col - q.col)
                for row in (p.row + d, p.row - d):
                    if 0 <= row < n:
                        va = grid[row * n + p.col]
                        vb = grid[row * n + q.col]
                        if va is color and vb is None:
                            out.add(Coord(q.col, row))
                        elif vb is color and va is None:
                            out.add(Coord(p.col, row))
            elif p.col == q.col:
                d = abs(p.row - q.row)
                for col in (p.col + d, p.col - d):
                    if 0 <= col < n:
                        va = grid[p.row * n + col]
                        vb = grid[q.row * n + col]
                        if va is color and vb is None:
                            out.add(Coord(col, q.row))
                        elif vb is color and va is None:
                            out.add(Coord(col, p.row))
    return frozenset(out)


def parse_moves(text: str, size: int = DEFAULT_SIZE) -> Board:
    """Replay a whitespace-separated move list into a board."""
    board = Board.empty(size)
    for token in text.split():
        board = board.place(parse_coord(token, size))
    return board


def format_moves(board: Board) -> str:
    return " ".join(format_coord(c) for c, _ in board.history)

"""Full-game Black engine: opening, case split, script or book, punish.

The engine mirrors the live game into a canonical frame fixed by
White's second stone.  Script and book lines are followed in that
frame and every chosen stone is mapped back through the inverse
transform before it is played, so the engine wins from any of the
eight symmetric variants of a covered position.

A deviation never needs search: each scripted or booked Black move
leaves at least one completion threat, and a White reply that does not
block it leaves the threat standing, so the next Black move wins
outright (priority one below).
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .board import Board, winning_points
from .book import ProofNode, StrategyBook
from .coords import Color, Coord, DEFAULT_SIZE, format_coord, row_major
from .errors import BookMiss, GameOver, NotBlacksTurn, NotWhitesTurn
from .symmetry import Transform, apply_transform, canonicalize_reply, inverse
from .tactic import Case, ScriptState, classify_case, initial_script_state, opening_move, scripted_black_move


class Mode(Enum):
    OPENING = "opening"
    SCRIPTED = "scripted"
    BOOKED = "booked"
    PUNISH = "punish"
    FINISHED = "finished"


class EngineSession:
    """One game played by the engine as Black.

    The session owns two boards: the real one and its canonical-frame
    mirror.  ``frame`` is set exactly once, when White's second stone
    arrives; before that the mirror trails behind and is rebuilt.
    """

    def __init__(self, book: Optional[StrategyBook] = None, size: int = DEFAULT_SIZE):
        self.book = book
        self.board = Board.empty(size)
        self.canonical = Board.empty(size)
        self.frame: Optional[Transform] = None
        self.mode = Mode.OPENING
        self.case: Optional[Case] = None
        self.script: Optional[ScriptState] = None
        self._pending: Optional[ProofNode] = None  # played, awaiting White
        self._next: Optional[ProofNode] = None  # booked reply to play

    # -- coordinate frame ------------------------------------------------

    def to_canonical(self, c: Coord) -> Coord:
        return apply_transform(self.frame, c, self.board.size) if self.frame else c

    def from_canonical(self, c: Coord) -> Coord:
        return apply_transform(inverse(self.frame), c, self.board.size) if self.frame else c

    # -- moves -------------------------------------------------------------

    def engine_black_move(self) -> Coord:
        """Choose, play and return Black's next stone."""
        board = self.board
        if board.status.is_over:
            raise GameOver("the game is already decided")
        if board.to_move is not Color.BLACK:
            raise NotBlacksTurn("engine consulted on White's turn")
        n = len(board.history)
        if n == 0 or n == 2:
            move = opening_move(board)
            self._play(move)
            return move
        if n == 4:
            self._classify()
        wins = winning_points(board, Color.BLACK)
        if wins:
            move = min(wins, key=row_major)
            self._play(move)
            self.mode = Mode.FINISHED
            return move
        if self.mode is Mode.SCRIPTED:
            canonical_move, self.script = scripted_black_move(self.canonical, self.script)
            move = self.from_canonical(canonical_move)
            self._play(move)
            return move
        if self.mode is Mode.BOOKED:
            node = self._next
            if node is None:
                raise BookMiss("book line exhausted without a win")
            move = self.from_canonical(node.black_move)
            self._pending, self._next = node, None
            self._play(move)
            return move
        raise BookMiss(f"no play available in mode {self.mode.value}")

    def white_move(self, c: Coord) -> None:
        """Apply a White stone and update frame, case and line tracking."""
        board = self.board
        if board.status.is_over:
            raise GameOver("the game is already decided")
        if board.to_move is not Color.WHITE:
            raise NotWhitesTurn("it is Black's turn")
        self.board = board.place(c)
        n = len(self.board.history)
        if n == 2:
            self.frame, image = canonicalize_reply(c, board.size)
            self.canonical = Board.empty(board.size).place(self.to_canonical(board.history[0][0])).place(image)
        else:
            self.canonical = self.canonical.place(self.to_canonical(c))
        if self.board.status.is_over:
            self.mode = Mode.FINISHED
            return
        if self.mode is Mode.BOOKED and self._pending is not None:
            node, self._pending = self._pending, None
            if node.win_at is None:
                child = node.replies.get(self.to_canonical(c))
                if child is not None:
                    self._next = child
                else:
                    self.mode = Mode.PUNISH
        elif self.mode is Mode.SCRIPTED:
            expected = self.script.expected_block if self.script else None
            if expected is not None and self.to_canonical(c) != expected:
                self.mode = Mode.PUNISH

    def legal_white_moves(self) -> frozenset[Coord]:
        board = self.board
        if board.status.is_over:
            return frozenset()
        if board.to_move is not Color.WHITE:
            raise NotWhitesTurn("it is Black's turn")
        return frozenset(board.empties())

    # -- internals -----------------------------------------------------

    def _play(self, move: Coord) -> None:
        self.board = self.board.place(move)
        if self.frame is not None:
            self.canonical = self.canonical.place(self.to_canonical(move))
        elif len(self.board.history) == 1:
            self.canonical = self.canonical.place(move)
        if self.board.status.is_over:
            self.mode = Mode.FINISHED

    def _classify(self) -> None:
        stone2 = self.to_canonical(self.board.history[1][0])
        stone4 = self.to_canonical(self.board.history[3][0])
        self.case = classify_case(stone2, stone4, self.board.size)
        if self.case is Case.OUTSIDE_W:
            self.mode = Mode.SCRIPTED
            self.script = initial_script_state()
            return
        self.mode = Mode.BOOKED
        if self.book is None:
            raise BookMiss("White's fourth stone is inside W and no book is loaded")
        root = self.book.lookup(stone2, stone4)
        if root is None:
            raise BookMiss(
                f"case {format_coord(stone2)}/{format_coord(stone4)} missing from the book"
            )
        self._next = root

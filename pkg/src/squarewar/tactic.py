"""Black's opening and the scripted forcing line.

Black opens on the centre and puts the second Black stone immediately
left of it (in the canonical frame).  Once White's fourth stone is known
the position splits in two: if it avoids the counter-threat set W the
fixed three-move script below forces a win by stone 11 at the latest;
if it lands inside W the position is handed to the searched strategy
book instead.

The script, in canonical coordinates at size 19:

  stone 5  I11  threatening J11   (square I10 J10 I11 J11)
  stone 7  H10  threatening H11   (square H10 I10 H11 I11)
  stone 9  I9   double threat J9 and H9
  stone 11 whichever threat White left open

White's replies to stones 5 and 7 are forced: any other move leaves the
threat open and Black wins on the spot.  This module works purely in the
canonical frame; callers playing in a transformed frame map coordinates
at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .board import Board, winning_points
from .coords import Color, Coord, DEFAULT_SIZE, center, row_major
from .errors import NotBlacksTurn, OutOfScript, TooLate
from .geometry import build_W
from .symmetry import canonicalize_reply, inverse, apply_transform


class Case(Enum):
    OUTSIDE_W = "outside_w"
    INSIDE_W = "inside_w"


# (stage stone number, move offset from centre, threat offset or None)
_SCRIPT = (
    (5, (-1, 1), (0, 1)),
    (7, (-2, 0), (-2, 1)),
    (9, (-1, -1), None),  # double threat, no single expected block
)


def script_moves(size: int = DEFAULT_SIZE) -> dict[int, Coord]:
    c = center(size)
    return {n: Coord(c.col + dc, c.row + dr) for n, (dc, dr), _ in _SCRIPT}


@dataclass(frozen=True)
class ScriptState:
    stage: Optional[int]  # 5, 7, 9, 11, or None once the line is finished
    expected_block: Optional[Coord]


def initial_script_state() -> ScriptState:
    return ScriptState(stage=5, expected_block=None)


def classify_case(stone2: Coord, stone4: Coord, size: int = DEFAULT_SIZE) -> Case:
    """Decide script versus book for a canonical-frame (stone2, stone4) pair."""
    if stone4 in build_W(stone2, size).all:
        return Case.INSIDE_W
    return Case.OUTSIDE_W


def opening_move(board: Board) -> Coord:
    """Black's first or second stone.

    The first stone is the centre.  The second goes immediately left of
    the centre in the canonical frame; when White's reply was folded by a
    non-identity transform the point is mapped back through the inverse,
    so the actual stone is always orthogonally adjacent to the centre.
    """
    if board.to_move is not Color.BLACK:
        raise NotBlacksTurn("the opening helper only picks Black stones")
    n = len(board.history)
    if n == 0:
        return center(board.size)
    if n == 2:
        stone2 = board.history[1][0]
        frame, _ = canonicalize_reply(stone2, board.size)
        c = center(board.size)
        canonical_second = Coord(c.col - 1, c.row)
        return apply_transform(inverse(frame), canonical_second, board.size)
    raise TooLate("the opening covers only Black's first two stones")


def scripted_black_move(
    board: Board, state: ScriptState
) -> tuple[Coord, ScriptState]:
    """Black's next stone of the forcing line, in the canonical frame.

    If Black already has an immediate winning point (White deviated, or
    the stage-9 double threat matured) the first such point in row-major
    order is returned and the script is finished.  Otherwise the stone
    for the current stage is returned along with the successor state.
    """
    if board.to_move is not Color.BLACK:
        raise NotBlacksTurn("script consulted when it is not Black's turn")
    if len(board.history) < 4:
        raise OutOfScript("the script starts after White's second stone")
    stone2 = board.history[1][0]
    stone4 = board.history[3][0]
    if classify_case(stone2, stone4, board.size) is Case.INSIDE_W:
        raise OutOfScript("White's fourth stone is inside W; use the book")
    wins = winning_points(board, Color.BLACK)
    if wins:
        return min(wins, key=row_major), ScriptState(stage=None, expected_block=None)
    for stone_no, move_off, threat_off in _SCRIPT:
        if state.stage == stone_no:
            c = center(board.size)
            move = Coord(c.col + move_off[0], c.row + move_off[1])
            expected = (
                Coord(c.col + threat_off[0], c.row + threat_off[1])
                if threat_off is not None
                else None
            )
            next_stage = stone_no + 2
            return move, ScriptState(stage=next_stage, expected_block=expected)
    # Stage 11 (or later) with no winning point cannot happen after a valid
    # script prefix: the stage-9 stone leaves a double threat and one White
    # stone cannot block both.
    raise OutOfScript(f"script state {state} does not match the position")

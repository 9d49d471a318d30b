"""Board coordinates and stone colors.

Columns are letters, rows are numbers.  On the default 19x19 board the
columns run A..S left to right and the rows 1..19 bottom to top, so the
centre point is J10.  Unlike Go notation the letter I is a real column:
A=0, H=7, I=8, J=9, K=10, ..., S=18.

Internally everything is a 0-based ``Coord(col, row)`` pair; the textual
form exists only at the edges (CLI, book files, HTTP payloads).
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, NamedTuple

from .errors import InvalidColumn, InvalidRow, MalformedInput

DEFAULT_SIZE = 19


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def other(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


class Coord(NamedTuple):
    col: int
    row: int


def column_letter(col: int) -> str:
    return chr(ord("A") + col)


def format_coord(c: Coord) -> str:
    """Render a coordinate in letter-number notation, e.g. (9, 9) -> "J10"."""
    return f"{column_letter(c.col)}{c.row + 1}"


def parse_coord(text: str, size: int = DEFAULT_SIZE) -> Coord:
    """Parse letter-number notation, case-insensitively.

    Raises InvalidColumn / InvalidRow for out-of-range parts and
    MalformedInput for text that is not letter-then-number at all.
    """
    s = text.strip()
    if len(s) < 2 or not s[0].isalpha():
        raise MalformedInput(f"cannot parse coordinate {text!r}")
    col = ord(s[0].upper()) - ord("A")
    if not 0 <= col < size:
        raise InvalidColumn(
            f"column {s[0].upper()!r} is outside A..{column_letter(size - 1)}"
        )
    try:
        row = int(s[1:]) - 1
    except ValueError:
        raise MalformedInput(f"cannot parse row in {text!r}") from None
    if not 0 <= row < size:
        raise InvalidRow(f"row {s[1:]} is outside 1..{size}")
    return Coord(col, row)


def in_bounds(c: Coord, size: int = DEFAULT_SIZE) -> bool:
    return 0 <= c.col < size and 0 <= c.row < size


def center(size: int = DEFAULT_SIZE) -> Coord:
    return Coord(size // 2, size // 2)


def all_coords(size: int = DEFAULT_SIZE) -> Iterator[Coord]:
    """Every point of the board in row-major order (row 1 first, A before S)."""
    for row in range(size):
        for col in range(size):
            yield Coord(col, row)


def row_major(c: Coord) -> tuple[int, int]:
    """Sort key for the deterministic row-major order used everywhere."""
    return (c.row, c.col)

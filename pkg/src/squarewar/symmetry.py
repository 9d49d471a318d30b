"""The eight symmetries of the square board and reply canonicalization.

After Black opens on the centre point the position is invariant under the
full dihedral group of the board, so White's first reply only matters up
to symmetry.  ``canonicalize_reply`` folds any non-centre reply into the
region right of the centre column and at or below the centre row:
columns K..S crossed with rows 1..10 on the 19x19 board, 90 points.

The two axis reflections alone cannot fold replies that sit on the centre
column itself (their column is fixed by both mirrors), which is why the
full group including the diagonal reflections and quarter turns is used.
The fold tries the transforms in one fixed order and keeps the first hit,
making the chosen representative reproducible.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

from .coords import Coord, DEFAULT_SIZE, center
from .errors import CenterNotCanonicalizable


class Transform(Enum):
    IDENTITY = "identity"
    REFLECT_COL = "reflect-col"  # mirror about the centre column (line J)
    REFLECT_ROW = "reflect-row"  # mirror about the centre row (line 10)
    ROT180 = "rot180"
    MAIN_DIAG = "diag-main"      # mirror about the A1..S19 diagonal
    ANTI_DIAG = "diag-anti"      # mirror about the A19..S1 diagonal
    ROT90 = "rot90"              # quarter turn counter-clockwise
    ROT270 = "rot270"            # quarter turn clockwise


# Fold order for canonicalize_reply.  Identity first so already-canonical
# replies stay put; the axis mirrors next; diagonal moves last.
CANONICAL_ORDER: tuple[Transform, ...] = (
    Transform.IDENTITY,
    Transform.REFLECT_COL,
    Transform.REFLECT_ROW,
    Transform.ROT180,
    Transform.MAIN_DIAG,
    Transform.ANTI_DIAG,
    Transform.ROT90,
    Transform.ROT270,
)

_INVERSES = {
    Transform.IDENTITY: Transform.IDENTITY,
    Transform.REFLECT_COL: Transform.REFLECT_COL,
    Transform.REFLECT_ROW: Transform.REFLECT_ROW,
    Transform.ROT180: Transform.ROT180,
    Transform.MAIN_DIAG: Transform.MAIN_DIAG,
    Transform.ANTI_DIAG: Transform.ANTI_DIAG,
    Transform.ROT90: Transform.ROT270,
    Transform.ROT270: Transform.ROT90,
}


def apply_transform(t: Transform, c: Coord, size: int = DEFAULT_SIZE) -> Coord:
    n = size - 1
    col, row = c
    if t is Transform.IDENTITY:
        return Coord(col, row)
    if t is Transform.REFLECT_COL:
        return Coord(n - col, row)
    if t is Transform.REFLECT_ROW:
        return Coord(col, n - row)
    if t is Transform.ROT180:
        return Coord(n - col, n - row)
    if t is Transform.MAIN_DIAG:
        return Coord(row, col)
    if t is Transform.ANTI_DIAG:
        return Coord(n - row, n - col)
    if t is Transform.ROT90:
        return Coord(n - row, col)
    if t is Transform.ROT270:
        return Coord(row, n - col)
    raise ValueError(t)


def inverse(t: Transform) -> Transform:
    return _INVERSES[t]


def is_canonical_reply(c: Coord, size: int = DEFAULT_SIZE) -> bool:
    """True when c lies in the canonical reply region (strictly right of the
    centre column, at or below the centre row)."""
    mid = size // 2
    return mid < c.col < size and 0 <= c.row <= mid


def canonical_replies(size: int = DEFAULT_SIZE) -> Iterator[Coord]:
    """The canonical reply region in row-major order."""
    mid = size // 2
    for row in range(mid + 1):
        for col in range(mid + 1, size):
            yield Coord(col, row)


def canonicalize_reply(
    stone2: Coord, size: int = DEFAULT_SIZE
) -> tuple[Transform, Coord]:
    """Fold White's first reply into the canonical region.

    Returns the first transform in CANONICAL_ORDER whose image of stone2
    is canonical, together with that image.  Total for every non-centre
    point; the centre itself has no non-trivial image and is rejected.
    """
    if size % 2 == 0:
        raise ValueError("canonicalization needs an odd board size")
    if stone2 == center(size):
        raise CenterNotCanonicalizable(
            "the centre point cannot be a White reply to the centre opening"
        )
    for t in CANONICAL_ORDER:
        image = apply_transform(t, stone2, size)
        if is_canonical_reply(image, size):
            return t, image
    raise AssertionError(f"no transform canonicalizes {stone2}")  # unreachable

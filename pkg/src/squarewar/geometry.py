"""Axis-aligned squares on the grid, and the counter-threat set W.

A winning square has its four vertices on grid intersections and its
edges parallel to the grid lines.  A square is identified by its
lowest-column, lowest-row corner plus the side length.

``build_W`` computes the set W of White fourth stones that interact with
Black's three-stone forcing line around the centre: nine fixed points that
sit on the squares the line uses, plus any point that would let White's
own stones complete three corners of a square together with one of the
two blocking points White is forced to play.  Three corners of an
axis-aligned square are exactly an isosceles right triangle whose two
legs lie along grid lines, so those extra points are the third-vertex
completions computed by ``iso_right_completions``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coords import Coord, DEFAULT_SIZE, center, in_bounds
from .errors import DegenerateInput


@dataclass(frozen=True)
class Square:
    corner: Coord  # lowest column, lowest row
    side: int

    def corners(self) -> tuple[Coord, Coord, Coord, Coord]:
        c, r = self.corner
        d = self.side
        return (
            Coord(c, r),
            Coord(c + d, r),
            Coord(c, r + d),
            Coord(c + d, r + d),
        )


def squares_through(at: Coord, size: int = DEFAULT_SIZE) -> list[Square]:
    """All squares having ``at`` as a vertex, side ascending then corner
    row-major.  A point can play any of the four corner roles."""
    out: list[Square] = []
    for side in range(1, size):
        sqs = []
        for dc in (side, 0):
            for dr in (side, 0):
                corner = Coord(at.col - dc, at.row - dr)
                if (
                    0 <= corner.col
                    and 0 <= corner.row
                    and corner.col + side < size
                    and corner.row + side < size
                ):
                    sqs.append(Square(corner, side))
        sqs.sort(key=lambda s: (s.corner.row, s.corner.col))
        out.extend(sqs)
    return out


def is_axis_square(points: tuple[Coord, Coord, Coord, Coord]) -> bool:
    """True when the four points are the vertices of one axis-aligned square."""
    if len(set(points)) != 4:
        return False
    cols = sorted({p.col for p in points})
    rows = sorted({p.row for p in points})
    if len(cols) != 2 or len(rows) != 2:
        return False
    if cols[1] - cols[0] != rows[1] - rows[0]:
        return False
    return set(points) == {Coord(c, r) for c in cols for r in rows}


def iso_right_completions(
    a: Coord, b: Coord, size: int = DEFAULT_SIZE
) -> frozenset[Coord]:
    """Third vertices u such that {a, b, u} is an isosceles right triangle
    with both legs along grid lines (equivalently: three corners of some
    axis-aligned square).

    Same row or column at distance d: the right angle sits at a or b, so u
    is at perpendicular offset +-d from one of them (up to 4 points).
    Equal column and row offset: a and b are the diagonal, u is one of the
    two remaining corners.  Any other pair admits no such triangle.
    Results are clipped to the board; occupancy is not geometry's concern.
    """
    if a == b:
        raise DegenerateInput("triangle completion needs two distinct points")
    out: set[Coord] = set()
    if a.row == b.row:
        d = abs(a.col - b.col)
        for p in (a, b):
            out.add(Coord(p.col, p.row + d))
            out.add(Coord(p.col, p.row - d))
    elif a.col == b.col:
        d = abs(a.row - b.row)
        for p in (a, b):
            out.add(Coord(p.col + d, p.row))
            out.add(Coord(p.col - d, p.row))
    elif abs(a.col - b.col) == abs(a.row - b.row):
        out.add(Coord(a.col, b.row))
        out.add(Coord(b.col, a.row))
    return frozenset(c for c in out if in_bounds(c, size))


# Offsets from the centre point.  At size 19 with the centre J10 these are
# I11, J11, H10, H11, I9, J9, H9, H13, J13: the vertices the forcing line
# plays or threatens, plus the four triangle completions of the two forced
# blocking points J11 and H11 with each other.
_W_BASE_OFFSETS = (
    (-1, 1), (0, 1), (-2, 0), (-2, 1), (-1, -1),
    (0, -1), (-2, -1), (-2, 3), (0, 3),
)
# The two points White is forced to occupy during the scripted line.
_ANCHOR_OFFSETS = ((0, 1), (-2, 1))  # J11, H11 at size 19


def w_anchors(size: int = DEFAULT_SIZE) -> tuple[Coord, Coord]:
    c = center(size)
    return tuple(Coord(c.col + dc, c.row + dr) for dc, dr in _ANCHOR_OFFSETS)


@dataclass(frozen=True)
class WSet:
    stone2: Coord
    base: frozenset[Coord]
    u_set: frozenset[Coord]   # completions with the first forced block
    v_set: frozenset[Coord]   # completions with the second forced block
    all: frozenset[Coord]


def build_W(stone2: Coord, size: int = DEFAULT_SIZE) -> WSet:
    """The counter-threat set for a given White second stone.

    ``all`` is deduplicated and clipped to the board.  Members may be
    occupied points (for instance Black's centre stone when stone2 is
    adjacent to it diagonally); whether a member is playable is decided by
    whoever consumes the set.
    """
    c = center(size)
    base = frozenset(
        Coord(c.col + dc, c.row + dr)
        for dc, dr in _W_BASE_OFFSETS
        if in_bounds(Coord(c.col + dc, c.row + dr), size)
    )
    first, second = w_anchors(size)
    u = iso_right_completions(stone2, first, size)
    v = iso_right_completions(stone2, second, size)
    return WSet(stone2=stone2, base=base, u_set=u, v_set=v, all=base | u | v)

import pytest
from hypothesis import given, strategies as st

from squarewar.coords import (
    Color,
    Coord,
    all_coords,
    center,
    column_letter,
    format_coord,
    in_bounds,
    parse_coord,
    row_major,
)
from squarewar.errors import InvalidColumn, InvalidRow, MalformedInput


def test_columns_include_the_letter_i():
    assert column_letter(0) == "A"
    assert column_letter(7) == "H"
    assert column_letter(8) == "I"
    assert column_letter(9) == "J"
    assert column_letter(18) == "S"


def test_center_is_j10():
    assert center() == Coord(9, 9)
    assert format_coord(center()) == "J10"


def test_parse_examples():
    assert parse_coord("A1") == Coord(0, 0)
    assert parse_coord("S19") == Coord(18, 18)
    assert parse_coord("I10") == Coord(8, 9)
    assert parse_coord(" k9 ") == Coord(10, 8)


def test_parse_rejects_bad_input():
    with pytest.raises(InvalidColumn):
        parse_coord("Z9")
    with pytest.raises(InvalidRow):
        parse_coord("A0")
    with pytest.raises(InvalidRow):
        parse_coord("A20")
    with pytest.raises(MalformedInput):
        parse_coord("10J")
    with pytest.raises(MalformedInput):
        parse_coord("Jten")
    with pytest.raises(MalformedInput):
        parse_coord("")
    # MalformedInput doubles as ValueError for generic handlers
    with pytest.raises(ValueError):
        parse_coord("??")


def test_round_trip_every_point():
    for c in all_coords():
        assert parse_coord(format_coord(c)) == c


@given(st.integers(0, 18), st.integers(0, 18))
def test_round_trip_property(col, row):
    c = Coord(col, row)
    assert parse_coord(format_coord(c)) == c
    assert in_bounds(c)


def test_all_coords_row_major():
    pts = list(all_coords())
    assert pts == sorted(pts, key=row_major)
    assert len(pts) == 361
    assert pts[0] == Coord(0, 0) and pts[-1] == Coord(18, 18)


def test_in_bounds_edges():
    assert in_bounds(Coord(0, 0)) and in_bounds(Coord(18, 18))
    assert not in_bounds(Coord(-1, 0))
    assert not in_bounds(Coord(0, 19))


def test_color_other():
    assert Color.BLACK.other is Color.WHITE
    assert Color.WHITE.other is Color.BLACK

"""Shared brute-force oracles and random-board generation for the tests."""

from __future__ import annotations

import json
import random
from dataclasses import replace
from itertools import combinations

from squarewar.board import Board, completed_square
from squarewar.coords import Color, Coord, format_coord, parse_coord
from squarewar.geometry import is_axis_square


def random_board(rng: random.Random, max_stones: int, size: int = 19) -> Board:
    """A legal random position: random placements, stone 3 constrained to
    touch stone 1, stopping early if somebody completes a square."""
    board = Board.empty(size)
    for i in range(max_stones):
        if board.status.is_over:
            break
        if i == 2:
            first = board.history[0][0]
            options = [
                c
                for c in (
                    Coord(first.col + 1, first.row),
                    Coord(first.col - 1, first.row),
                    Coord(first.col, first.row + 1),
                    Coord(first.col, first.row - 1),
                )
                if 0 <= c.col < size and 0 <= c.row < size and board.stone_at(c) is None
            ]
        else:
            options = board.empties()
        board = board.place(rng.choice(options))
    return board


def with_stone(board: Board, at: Coord, color: Color) -> Board:
    """Drop a stone of an arbitrary color, bypassing turn order; oracle
    plumbing only."""
    grid = list(board.grid)
    grid[at.row * board.size + at.col] = color
    return replace(board, grid=tuple(grid))


def brute_winning_points(board: Board, color: Color) -> frozenset[Coord]:
    out = set()
    for e in board.empties():
        if completed_square(with_stone(board, e, color), e, color) is not None:
            out.add(e)
    return frozenset(out)


def brute_has_square(board: Board, at: Coord, color: Color) -> bool:
    """4-subset scan: some four same-color stones including ``at`` form a
    square."""
    stones = [c for c, col in board.history if col is color]
    for quad in combinations(stones, 4):
        if at in quad and is_axis_square(quad):
            return True
    return False


def legs_axis_aligned_isosceles(a: Coord, b: Coord, r: Coord) -> bool:
    """Brute predicate: {a,b,r} is a right isosceles triangle whose two
    legs run along grid lines."""
    if len({a, b, r}) != 3:
        return False
    for apex, u, v in ((a, b, r), (b, a, r), (r, a, b)):
        du = (u.col - apex.col, u.row - apex.row)
        dv = (v.col - apex.col, v.row - apex.row)
        for leg1, leg2 in ((du, dv), (dv, du)):
            if leg1[1] == 0 and leg2[0] == 0 and abs(leg1[0]) == abs(leg2[1]) != 0:
                return True
    return False


def shift_inward(text: str, size: int = 19) -> str:
    """Same point moved one column toward the middle of the board; always
    in bounds and never the identity."""
    c = parse_coord(text, size)
    col = c.col + 1 if c.col < size // 2 else c.col - 1
    return format_coord(Coord(col, c.row))


def tamper_case(case_obj: dict, rng: random.Random) -> tuple[dict, str]:
    """Deep copy of one serialized book case with a single coordinate of
    its proof chain (a black move, a recorded threat, or a reply key)
    shifted one column inward.  Returns the copy and a description."""
    case = json.loads(json.dumps(case_obj))
    sites: list[tuple[dict, str, object]] = []

    def walk(node: dict) -> None:
        sites.append((node, "black", None))
        for i in range(len(node["threats"])):
            sites.append((node, "threat", i))
        for key in list(node["replies"]):
            sites.append((node, "reply", key))
            walk(node["replies"][key])

    walk(case["root"])
    node, kind, which = sites[rng.randrange(len(sites))]
    if kind == "black":
        old = node["black"]
        node["black"] = shift_inward(old)
    elif kind == "threat":
        old = node["threats"][which]
        node["threats"][which] = shift_inward(old)
    else:
        old = which
        node["replies"][shift_inward(old)] = node["replies"].pop(old)
    label = f"{case['stone2']}/{case['stone4']}"
    return case, f"{label}: {kind} {old} shifted to {shift_inward(old)}"

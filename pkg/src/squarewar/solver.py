"""Backtracking search proving Black's forced win for every case in W.

For each canonical White second stone and each White fourth stone inside
the counter-threat set W, the solver searches Black threat sequences:
moves that put a third Black stone on a square two existing Black stones
already span.  Candidate moves come from pairs of Black stones on one
grid line at distance 1..3; the two empty corners completing a square
with the pair give the stone to play and the point it threatens, in both
roles.  After each Black move, if White could complete a square anywhere
the line is refuted and undone; with two or more Black threats no single
White stone covers them all and the line is a win; with exactly one
threat White's block is forced and the search continues.

Depth is capped by ``max_stone``.  Caps are tried in increasing steps of
two, so the recorded proof for a case is the first one found at the
smallest cap that admits any proof; observed winning stone numbers are
therefore not inflated by a deep first-branch wander.

The search keeps its own mutable position with incrementally maintained
winning-point sets; a stone for one side never creates nor invalidates
the other side's completion points except by sitting on one, so updates
only scan pairs through the new stone.  The public ``Board`` stays
immutable; verification code never uses these internals.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .board import Board
from .book import ProofNode, SolveReport, StrategyBook, win_stone
from .coords import Color, Coord, DEFAULT_SIZE, center, row_major
from .errors import PreconditionViolation
from .geometry import build_W
from .symmetry import canonical_replies

_EMPTY, _BLACK, _WHITE = 0, 1, 2


@dataclass(frozen=True)
class CandidateMove:
    play: Coord
    threat: Coord
    support: tuple[Coord, Coord]


@dataclass(frozen=True)
class SolverConfig:
    mode: str = "paper"  # "paper" or "extended"
    max_stone: int = 31
    jobs: int = 1
    size: int = DEFAULT_SIZE
    check_undo: bool = False


def second_black_stone(size: int = DEFAULT_SIZE) -> Coord:
    c = center(size)
    return Coord(c.col - 1, c.row)


def stone2_domain(config: SolverConfig) -> list[Coord]:
    """White second stones to solve, row-major.

    Paper mode is the region strictly right of the centre column; extended
    mode adds the centre-column replies the two axis mirrors alone cannot
    fold away, i.e. the full quadrant-plus-boundary minus the centre.
    """
    size = config.size
    mid = size // 2
    if config.mode == "paper":
        return list(canonical_replies(size))
    if config.mode == "extended":
        return [
            Coord(col, row)
            for row in range(mid + 1)
            for col in range(mid, size)
            if Coord(col, row) != center(size)
        ]
    raise PreconditionViolation(f"unknown solve mode {config.mode!r}")


def playable_w(stone2: Coord, size: int = DEFAULT_SIZE) -> list[Coord]:
    """W members that are actually empty in the position after stone 3."""
    occupied = {center(size), second_black_stone(size), stone2}
    return sorted(build_W(stone2, size).all - occupied, key=row_major)


def case_domain(config: SolverConfig) -> list[tuple[Coord, Coord]]:
    return [
        (s2, s4)
        for s2 in stone2_domain(config)
        for s4 in playable_w(s2, config.size)
    ]


class _Position:
    """Mutable search position with undo and incremental winning points."""

    __slots__ = ("size", "grid", "black", "white", "black_wps", "white_wps", "moves")

    def __init__(self, size: int, blacks: list[Coord], whites: list[Coord]):
        self.size = size
        self.grid = bytearray(size * size)
        self.black = [(c.col, c.row) for c in blacks]
        self.white = [(c.col, c.row) for c in whites]
        for col, row in self.black:
            self.grid[row * size + col] = _BLACK
        for col, row in self.white:
            self.grid[row * size + col] = _WHITE
        self.black_wps = self._scan_wps(self.black, _BLACK)
        self.white_wps = self._scan_wps(self.white, _WHITE)
        self.moves: list = []

    def _scan_wps(self, stones: list, code: int) -> set:
        out: set = set()
        for i in range(len(stones) - 1):
            for j in range(i + 1, len(stones)):
                out |= self._pair_wps(stones[i], stones[j], code)
        return out

    def _pair_wps(self, p: tuple, q: tuple, code: int) -> set:
        n = self.size
        grid = self.grid
        pc, pr = p
        qc, qr = q
        out: set = set()
        if pr == qr:
            d = abs(pc - qc)
            for row in (pr + d, pr - d):
                if 0 <= row < n:
                    va = grid[row * n + pc]
                    vb = grid[row * n + qc]
                    if va == code and vb == _EMPTY:
                        out.add((qc, row))
                    elif vb == code and va == _EMPTY:
                        out.add((pc, row))
        elif pc == qc:
            d = abs(pr - qr)
            for col in (pc + d, pc - d):
                if 0 <= col < n:
                    va = grid[pr * n + col]
                    vb = grid[qr * n + col]
                    if va == code and vb == _EMPTY:
                        out.add((col, qr))
                    elif vb == code and va == _EMPTY:
                        out.add((col, pr))
        return out

    def _new_threats(self, c: tuple, code: int, stones: list) -> set:
        out: set = set()
        for u in stones:
            if u != c:
                out |= self._pair_wps(c, u, code)
        return out

    def place(self, c: tuple, code: int) -> None:
        self.grid[c[1] * self.size + c[0]] = code
        self.moves.append((c, code, self.black_wps, self.white_wps))
        bw = set(self.black_wps)
        ww = set(self.white_wps)
        bw.discard(c)
        ww.discard(c)
        if code == _BLACK:
            self.black.append(c)
            bw |= self._new_threats(c, _BLACK, self.black)
        else:
            self.white.append(c)
            ww |= self._new_threats(c, _WHITE, self.white)
        self.black_wps = bw
        self.white_wps = ww

    def undo(self) -> None:
        c, code, bw, ww = self.moves.pop()
        self.grid[c[1] * self.size + c[0]] = _EMPTY
        (self.black if code == _BLACK else self.white).pop()
        self.black_wps = bw
        self.white_wps = ww

    def state_key(self) -> tuple:
        return (
            bytes(self.grid),
            tuple(self.black),
            tuple(self.white),
            frozenset(self.black_wps),
            frozenset(self.white_wps),
        )

    def candidates(self) -> list[tuple]:
        """(play, threat, p, q) quads in the pinned deterministic order:
        support pair by insertion order, positive perpendicular offset
        before negative, then the two corner roles row-major first."""
        n = self.size
        grid = self.grid
        black = self.black
        out: list[tuple] = []
        for i in range(len(black) - 1):
            p = black[i]
            pc, pr = p
            for j in range(i + 1, len(black)):
                q = black[j]
                qc, qr = q
                if pr == qr:
                    d = abs(pc - qc)
                    if d > 3:
                        continue
                    for off in (d, -d):
                        row = pr + off
                        if 0 <= row < n and grid[row * n + pc] == _EMPTY and grid[row * n + qc] == _EMPTY:
                            a = (pc, row)
                            b = (qc, row)
                            lo, hi = (a, b) if pc < qc else (b, a)
                            out.append((lo, hi, p, q))
                            out.append((hi, lo, p, q))
                elif pc == qc:
                    d = abs(pr - qr)
                    if d > 3:
                        continue
                    for off in (d, -d):
                        col = pc + off
                        if 0 <= col < n and grid[pr * n + col] == _EMPTY and grid[qr * n + col] == _EMPTY:
                            a = (col, pr)
                            b = (col, qr)
                            lo, hi = (a, b) if pr < qr else (b, a)
                            out.append((lo, hi, p, q))
                            out.append((hi, lo, p, q))
        return out


def _coord(t: tuple) -> Coord:
    return Coord(t[0], t[1])


def _sorted_coords(pts) -> tuple[Coord, ...]:
    return tuple(Coord(c, r) for r, c in sorted((r, c) for c, r in pts))


def _search(pos: _Position, stone: int, cap: int, check_undo: bool) -> Optional[ProofNode]:
    wps = pos.black_wps
    if wps:
        move = min(wps, key=lambda t: (t[1], t[0]))
        return ProofNode(_coord(move), _sorted_coords(wps), win_at=stone)
    if stone + 2 > cap:
        return None
    key = pos.state_key() if check_undo else None
    for play, threat, _p, _q in pos.candidates():
        pos.place(play, _BLACK)
        if pos.white_wps:
            pos.undo()
            continue
        threats = pos.black_wps
        if len(threats) >= 2:
            node = ProofNode(_coord(play), _sorted_coords(threats), win_at=stone + 2)
            pos.undo()
            return node
        block = next(iter(threats))
        pos.place(block, _WHITE)
        child = _search(pos, stone + 2, cap, check_undo)
        pos.undo()
        pos.undo()
        if check_undo and pos.state_key() != key:
            raise AssertionError("undo did not restore the search position")
        if child is not None:
            return ProofNode(
                _coord(play), (_coord(block),), None, {_coord(block): child}
            )
    return None


def _initial_position(stone2: Coord, stone4: Coord, size: int) -> _Position:
    return _Position(
        size,
        blacks=[center(size), second_black_stone(size)],
        whites=[stone2, stone4],
    )


def solve_case(
    stone2: Coord, stone4: Coord, config: SolverConfig = SolverConfig()
) -> Optional[ProofNode]:
    """Prove Black's forced win for one (stone2, stone4) case, or return
    None when no proof exists within ``max_stone``."""
    size = config.size
    occupied = {center(size), second_black_stone(size), stone2}
    if stone4 in occupied or stone4 not in build_W(stone2, size).all:
        raise PreconditionViolation(
            "solve_case needs an empty White fourth stone inside W"
        )
    for cap in range(7, config.max_stone + 1, 2):
        pos = _initial_position(stone2, stone4, size)
        node = _search(pos, 5, cap, config.check_undo)
        if node is not None:
            return node
    return None


def _solve_one(args) -> Optional[ProofNode]:
    stone2, stone4, config = args
    return solve_case(stone2, stone4, config)


def solve_all(config: SolverConfig = SolverConfig()) -> tuple[SolveReport, StrategyBook]:
    """Run every case in the configured domain and assemble book + report.

    Deterministic for a fixed config: the case list is in row-major domain
    order and per-case results do not depend on ``jobs``.
    """
    t0 = time.perf_counter()
    cases = case_domain(config)
    worker = replace(config, jobs=1)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunk = max(1, len(cases) // (config.jobs * 8))
            results = list(
                pool.map(
                    _solve_one,
                    [(s2, s4, worker) for s2, s4 in cases],
                    chunksize=chunk,
                )
            )
    else:
        results = [solve_case(s2, s4, worker) for s2, s4 in cases]
    book = StrategyBook(
        size=config.size, mode=config.mode, max_stone=config.max_stone
    )
    histogram: dict[int, int] = {}
    unproved: list[tuple[Coord, Coord]] = []
    for (s2, s4), node in zip(cases, results):
        if node is None:
            unproved.append((s2, s4))
            continue
        book.cases[(s2, s4)] = node
        ws = win_stone(node)
        histogram[ws] = histogram.get(ws, 0) + 1
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    report = SolveReport(
        c_e=len(cases),
        c_w=len(book.cases),
        w_a=not unproved,
        max_win_stone=max(histogram) if histogram else 0,
        histogram=histogram,
        elapsed_ms=elapsed_ms,
        unproved=tuple(unproved),
    )
    return report, book


def default_jobs() -> int:
    return os.cpu_count() or 1


def candidate_moves(board: Board) -> list[CandidateMove]:
    """Black's candidate threat moves on a public board, in search order."""
    pos = _Position(
        board.size,
        blacks=list(board.stones(Color.BLACK)),
        whites=list(board.stones(Color.WHITE)),
    )
    return [
        CandidateMove(play=_coord(r), threat=_coord(s), support=(_coord(p), _coord(q)))
        for r, s, p, q in pos.candidates()
    ]

"""Independent checks of the tactic and the strategy book.

Everything here is built from the immutable board, the geometry
primitives and the engine; none of it touches the solver's internals,
so a book that validates has been confirmed by a second, unrelated
implementation of the rules.

Two facts keep the full adversarial quantifier cheap.  A newly placed
White stone cannot create or destroy a completion point for Black other
than by sitting on it, because Black's completion points depend only on
Black's stones and on the emptiness of the point itself.  So after
White replies at w to a position where Black's winning set is T, the
new winning set is exactly T - {w}: any non-blocking reply loses on the
spot and only members of T need explicit children.  Second, White can
never win with the reply either, because the checks below assert that
White's own winning set is empty after every recorded Black move.
The set identity is property-tested in the suite and each node run
additionally replays a sample of replies on a real board.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .board import Board, winning_points
from .book import ProofNode, StrategyBook
from .coords import Color, Coord, DEFAULT_SIZE, center, format_coord, row_major
from .engine import EngineSession
from .errors import StructuralError, ValidationFailure
from .geometry import build_W
from .symmetry import canonical_replies
from .tactic import script_moves


@dataclass
class ScriptReport:
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class BookReport:
    cases: int = 0
    valid: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class ReplayStats:
    games: int = 0
    black_wins: int = 0
    max_stone: int = 0
    mean_stone: float = 0.0
    digest: str = ""
    failures: list[str] = field(default_factory=list)


def _case_label(stone2: Coord, stone4: Coord) -> str:
    return f"{format_coord(stone2)}/{format_coord(stone4)}"


def _sample_empty(board: Board, exclude: Coord) -> Coord:
    """First empty point in row-major order other than ``exclude``; a few
    stones never exhaust the board, so the scan stops within one row."""
    n = board.size
    for row in range(n):
        for col in range(n):
            c = Coord(col, row)
            if c != exclude and board.stone_at(c) is None:
                return c
    raise ValueError("board unexpectedly full")


def _expected_threats(board: Board, expect: set[Coord], who: str, out: list[str]) -> bool:
    """Black's recomputed winning set must equal ``expect`` and White must
    have none.  Appends a failure line and returns False otherwise."""
    white = winning_points(board, Color.WHITE)
    if white:
        out.append(f"{who}: White has winning points {sorted(white, key=row_major)}")
        return False
    black = winning_points(board, Color.BLACK)
    if set(black) != expect:
        out.append(f"{who}: Black threats {sorted(black, key=row_major)} != expected {sorted(expect, key=row_major)}")
        return False
    return True


def verify_script_all(size: int = DEFAULT_SIZE) -> ScriptReport:
    """Exhaustively replay the scripted line for every canonical second
    White stone and every playable fourth stone outside W.

    At each Black move the threat set must be exactly the scripted one
    and White must have no winning point; after the stage-9 double
    threat every White block still loses to the other threat, and a
    sampled non-blocking reply is punished on a real board as well.
    Non-blocking replies to stones 5 and 7 lose by the set identity in
    the module docstring; one such reply per case is also replayed
    directly.
    """
    report = ScriptReport()
    moves = script_moves(size)
    b5, b7, b9 = moves[5], moves[7], moves[9]
    c = center(size)
    third = Coord(c.col - 1, c.row)
    t5 = Coord(c.col, c.row + 1)  # J11: completes the b5 square
    t7 = Coord(c.col - 2, c.row + 1)  # H11
    t9 = {Coord(c.col, c.row - 1), Coord(c.col - 2, c.row - 1)}  # J9, H9
    for stone2 in canonical_replies(size):
        w_all = build_W(stone2, size).all
        base = Board.empty(size).place(c).place(stone2).place(third)
        for stone4 in base.empties():
            if stone4 in w_all:
                continue
            report.cases += 1
            label = _case_label(stone2, stone4)
            fails = report.failures
            board = base.place(stone4)

            board = board.place(b5)
            if not _expected_threats(board, {t5}, f"{label} after stone 5", fails):
                continue
            # a non-blocking White reply keeps the threat; replay one directly
            sample = _sample_empty(board, t5)
            probe = board.place(sample)
            if t5 not in winning_points(probe, Color.BLACK) or not probe.place(t5).status.is_over:
                fails.append(f"{label}: non-block {format_coord(sample)} after stone 5 not punished")
                continue
            board = board.place(t5)

            board = board.place(b7)
            if not _expected_threats(board, {t7}, f"{label} after stone 7", fails):
                continue
            board = board.place(t7)

            board = board.place(b9)
            if not _expected_threats(board, t9, f"{label} after stone 9", fails):
                continue
            for block in sorted(t9, key=row_major):
                after = board.place(block)
                wins = winning_points(after, Color.BLACK)
                if set(wins) != t9 - {block}:
                    fails.append(f"{label}: block {format_coord(block)} leaves {sorted(wins, key=row_major)}")
                    continue
                final = after.place(min(wins, key=row_major))
                st = final.status
                if not (st.winner is Color.BLACK and st.winning_stone == 11):
                    fails.append(f"{label}: no stone-11 win after block {format_coord(block)}")
    return report


def _structural(cond: bool, msg: str) -> None:
    if not cond:
        raise StructuralError(msg)


def _check_chain(board: Board, node: ProofNode, stone: int, label: str, fails: list[str]) -> None:
    """Adversarial check of one proof chain, replayed on a real board.

    ``board`` is the position with White to have just moved (Black to
    play ``stone``).  Every White reply is covered: members of
    node.threats by an explicit child or the surviving double threat,
    everything else by the T - {w} identity plus direct samples.
    """
    mv = node.black_move
    if board.stone_at(mv) is not None:
        fails.append(f"{label}: stone {stone} move {format_coord(mv)} is occupied")
        return
    after = board.place(mv)
    if after.to_move is not Color.WHITE and not after.status.is_over:
        fails.append(f"{label}: stone {stone} was not a Black move")
        return
    if node.win_at == stone:
        # immediate completion; not emitted for the standard opening but
        # legal in the format
        if not (after.status.winner is Color.BLACK and after.status.winning_stone == stone):
            fails.append(f"{label}: move {format_coord(mv)} does not complete a square at stone {stone}")
        return
    threats = winning_points(after, Color.BLACK)
    if set(node.threats) != set(threats):
        fails.append(
            f"{label}: stone {stone} recorded threats {list(map(format_coord, node.threats))}"
            f" != actual {sorted(map(format_coord, threats))}"
        )
        return
    if winning_points(after, Color.WHITE):
        fails.append(f"{label}: White has a winning point after stone {stone}")
        return
    empties = after.empties()
    if node.win_at is not None:
        if node.win_at != stone + 2 or len(threats) < 2:
            fails.append(f"{label}: stone {stone} win_at={node.win_at} without a double threat")
            return
        if node.replies:
            fails.append(f"{label}: winning node at stone {stone} has children")
            return
        # every reply leaves T - {w} nonempty; replay the blocks directly
        for w in sorted(threats, key=row_major):
            rest = threats - {w}
            if not rest:
                fails.append(f"{label}: block {format_coord(w)} kills the double threat")
                return
            final = after.place(w).place(min(rest, key=row_major))
            if final.status.winner is not Color.BLACK:
                fails.append(f"{label}: block {format_coord(w)} not punished on the board")
                return
        return
    if len(threats) != 1 or set(node.replies) != set(threats):
        fails.append(f"{label}: stone {stone} is not a single forced threat with one child")
        return
    (block,) = node.replies
    # direct sample of one non-blocking reply; the rest follow from T - {w}
    sample = next((p for p in empties if p != block), None)
    if sample is not None:
        probe = after.place(sample)
        wins = winning_points(probe, Color.BLACK)
        if set(wins) != {block} or not probe.place(block).status.is_over:
            fails.append(f"{label}: non-block {format_coord(sample)} after stone {stone} not punished")
            return
    _check_chain(after.place(block), node.replies[block], stone + 2, label, fails)


def validate_book(book: StrategyBook, strict: bool = True) -> BookReport:
    """Re-prove every case of ``book`` against all White replies.

    Raises StructuralError for malformed books.  With ``strict`` (the
    default) the first failing case raises ValidationFailure naming it;
    otherwise all failures are collected in the report.
    """
    size = book.size
    c = center(size)
    third = Coord(c.col - 1, c.row)
    report = BookReport(cases=len(book.cases))
    for (stone2, stone4), root in book.sorted_cases():
        label = _case_label(stone2, stone4)
        _structural(isinstance(root, ProofNode), f"{label}: case value is not a proof node")
        _structural(stone2 != c and stone2 != third, f"{label}: second stone on a Black point")
        _structural(stone4 in build_W(stone2, size).all, f"{label}: fourth stone outside W")
        _structural(stone4 not in (c, third, stone2), f"{label}: fourth stone occupied")
        board = Board.empty(size).place(c).place(stone2).place(third).place(stone4)
        before = len(report.failures)
        _check_chain(board, root, 5, label, report.failures)
        if len(report.failures) == before:
            report.valid += 1
        elif strict:
            raise ValidationFailure(report.failures[before])
    return report


def replay_random(book: StrategyBook, games: int, seed: int) -> ReplayStats:
    """Engine (Black) versus a seeded uniformly random White player.

    Deterministic per seed; the digest hashes every transcript so two
    runs can be compared exactly.
    """
    stats = ReplayStats(games=games)
    rng = random.Random(seed)
    hasher = hashlib.sha256()
    total_stones = 0
    for g in range(games):
        session = EngineSession(book=book, size=book.size)
        while not session.board.status.is_over:
            if session.board.to_move is Color.BLACK:
                session.engine_black_move()
            else:
                legal = sorted(session.legal_white_moves(), key=row_major)
                session.white_move(legal[rng.randrange(len(legal))])
        transcript = " ".join(format_coord(m) for m, _ in session.board.history)
        hasher.update(transcript.encode())
        hasher.update(b"\n")
        stones = len(session.board.history)
        total_stones += stones
        stats.max_stone = max(stats.max_stone, stones)
        if session.board.status.winner is Color.BLACK:
            stats.black_wins += 1
        else:
            stats.failures.append(f"game {g}: {transcript}")
    stats.mean_stone = total_stones / games if games else 0.0
    stats.digest = hasher.hexdigest()
    return stats


def verification_obj(script: ScriptReport | None, book: BookReport | None) -> dict:
    """Combined verification report in the documented JSON shape."""
    return {
        "script_cases": script.cases if script else 0,
        "script_failures": list(script.failures) if script else [],
        "book_cases": book.cases if book else 0,
        "book_failures": list(book.failures) if book else [],
    }

"""HTTP JSON API around engine sessions.

One in-memory game table, LRU-evicted above a cap.  Requests for
different games run concurrently; requests for the same game are
serialized by a per-game lock.  The engine replies synchronously
inside the move POST, so the client protocol is one round-trip per
White move.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .board import winning_points
from .book import StrategyBook
from .coords import Color, Coord, DEFAULT_SIZE, column_letter, format_coord, parse_coord, row_major
from .engine import EngineSession
from .errors import BookMiss, GameOver, MalformedInput, NotWhitesTurn, Occupied, OutOfBounds
from .tactic import Case

DEFAULT_MAX_GAMES = 256


class MoveBody(BaseModel):
    coord: str


@dataclass
class GameResource:
    session: EngineSession
    created: str
    updated: str
    lock: threading.Lock = field(default_factory=threading.Lock)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _error(status: int, code: str, detail: str = "") -> JSONResponse:
    return JSONResponse({"error": code, "detail": detail}, status_code=status)


def _case_name(case: Optional[Case]) -> str:
    if case is None:
        return "pending"
    return "in-W" if case is Case.INSIDE_W else "out-of-W"


def _board_rows(session: EngineSession) -> list[str]:
    """One string per row, row 1 first; '.', 'B', 'W' per intersection."""
    size = session.board.size
    cells = {}
    for coord, color in session.board.history:
        cells[coord] = "B" if color is Color.BLACK else "W"
    return [
        "".join(cells.get(Coord(col, row), ".") for col in range(size))
        for row in range(size)
    ]


def game_state(gid: str, game: GameResource) -> dict:
    session = game.session
    board = session.board
    status = board.status
    threats_black = sorted(winning_points(board, Color.BLACK), key=row_major)
    threats_white = sorted(winning_points(board, Color.WHITE), key=row_major)
    last_engine = None
    for coord, color in reversed(board.history):
        if color is Color.BLACK:
            last_engine = format_coord(coord)
            break
    return {
        "id": gid,
        "size": board.size,
        "history": [format_coord(c) for c, _ in board.history],
        "board": _board_rows(session),
        "to_move": None if status.is_over else board.to_move.value,
        "status": {
            "over": status.is_over,
            "winner": status.winner.value if status.winner else None,
            "winning_square": [format_coord(c) for c in status.square.corners()] if status.square else None,
            "winning_stone": status.winning_stone,
        },
        "threats": {
            "black": [format_coord(c) for c in threats_black],
            "white": [format_coord(c) for c in threats_white],
        },
        "case": _case_name(session.case),
        "frame": session.frame.value if session.frame else None,
        "mode": session.mode.value,
        "last_engine_move": last_engine,
        "columns": [column_letter(i) for i in range(board.size)],
        "created": game.created,
        "updated": game.updated,
    }


def create_app(
    book: Optional[StrategyBook] = None,
    size: int = DEFAULT_SIZE,
    max_games: int = DEFAULT_MAX_GAMES,
) -> FastAPI:
    app = FastAPI(title="squarewar", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    games: OrderedDict[str, GameResource] = OrderedDict()
    table_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return _error(400, "malformed_body", "expected a JSON body like {\"coord\": \"K9\"}")

    def _get(gid: str) -> Optional[GameResource]:
        with table_lock:
            game = games.get(gid)
            if game is not None:
                games.move_to_end(gid)
            return game

    @app.get("/health")
    def health():
        return {"status": "ok", "book_cases": len(book.cases) if book else 0}

    @app.post("/games", status_code=201)
    def create_game():
        session = EngineSession(book=book, size=size)
        session.engine_black_move()
        gid = uuid.uuid4().hex[:12]
        now = _now()
        game = GameResource(session=session, created=now, updated=now)
        with table_lock:
            games[gid] = game
            while len(games) > max_games:
                games.popitem(last=False)
        return game_state(gid, game)

    @app.get("/games/{gid}")
    def get_game(gid: str):
        game = _get(gid)
        if game is None:
            return _error(404, "unknown_game", gid)
        with game.lock:
            return game_state(gid, game)

    @app.post("/games/{gid}/moves")
    def play_move(gid: str, body: MoveBody):
        game = _get(gid)
        if game is None:
            return _error(404, "unknown_game", gid)
        with game.lock:
            session = game.session
            try:
                coord = parse_coord(body.coord, session.board.size)
            except MalformedInput as exc:
                return _error(400, "malformed_coordinate", str(exc))
            try:
                session.white_move(coord)
            except GameOver:
                return _error(409, "game_over", "the game is already decided")
            except NotWhitesTurn:
                return _error(409, "not_whites_turn", "wait for the engine move")
            except Occupied:
                return _error(422, "occupied", f"{body.coord} is occupied")
            except OutOfBounds:
                return _error(422, "out_of_bounds", body.coord)
            if not session.board.status.is_over:
                try:
                    session.engine_black_move()
                except BookMiss as exc:
                    return _error(500, "book_miss", str(exc))
            game.updated = _now()
            return game_state(gid, game)

    @app.delete("/games/{gid}", status_code=204)
    def delete_game(gid: str):
        with table_lock:
            game = games.pop(gid, None)
        if game is None:
            return _error(404, "unknown_game", gid)
        return Response(status_code=204)

    return app

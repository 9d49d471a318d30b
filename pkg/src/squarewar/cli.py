"""Command-line entry point: solve, verify, play, serve.

Exit codes: 0 success, 1 verification or proof failure, 2 bad
invocation or I/O problems.  Output is line-oriented key=value so CI
can gate on it.  SQUAREWAR_BOOK provides the default book path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .board import Board, winning_points
from .book import StrategyBook
from .coords import Color, Coord, column_letter, format_coord, parse_coord, row_major
from .engine import EngineSession
from .errors import BookMiss, IllegalMove, MalformedInput, SquareWarError, StructuralError
from .solver import SolverConfig, default_jobs, solve_all
from .verify import replay_random, validate_book, verification_obj, verify_script_all

BOOK_ENV = "SQUAREWAR_BOOK"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _load_book(path: Optional[str]) -> StrategyBook:
    if not path:
        raise FileNotFoundError(
            f"no book given; pass --book or set {BOOK_ENV}"
        )
    return StrategyBook.load(path)


def cmd_solve(args: argparse.Namespace) -> int:
    config = SolverConfig(
        mode=args.mode,
        max_stone=args.max_stone,
        jobs=args.jobs or default_jobs(),
    )
    report, book = solve_all(config)
    print(
        f"C_e={report.c_e} C_w={report.c_w} W_a={_flag(report.w_a)}"
        f" max_win_stone={report.max_win_stone} elapsed_ms={report.elapsed_ms}"
    )
    print("histogram=" + ",".join(f"{k}:{v}" for k, v in sorted(report.histogram.items())))
    for stone2, stone4 in report.unproved:
        print(f"unproved={format_coord(stone2)}/{format_coord(stone4)}")
    try:
        if args.book:
            book.save(args.book)
            print(f"book={args.book}")
        if args.report:
            report.save(args.report)
            print(f"report={args.report}")
    except OSError as exc:
        print(f"error=io detail={exc}", file=sys.stderr)
        return 2
    return 0 if report.w_a else 1


def cmd_verify(args: argparse.Namespace) -> int:
    script = None
    bookrep = None
    if args.what == "script":
        script = verify_script_all()
        print(f"script_cases={script.cases} script_failures={len(script.failures)}")
        for line in script.failures[:20]:
            print(f"failure={line}")
        code = 0 if script.ok else 1
    elif args.what == "book":
        try:
            book = _load_book(args.book)
        except (OSError, StructuralError, json.JSONDecodeError) as exc:
            print(f"error=bad_book detail={exc}", file=sys.stderr)
            return 2
        bookrep = validate_book(book, strict=False)
        print(f"book_cases={bookrep.cases} book_failures={len(bookrep.failures)}")
        for line in bookrep.failures[:20]:
            print(f"failure={line}")
        print(f"{bookrep.valid}/{bookrep.cases} valid")
        code = 0 if bookrep.ok else 1
    else:  # replay
        try:
            book = _load_book(args.book)
        except (OSError, StructuralError, json.JSONDecodeError) as exc:
            print(f"error=bad_book detail={exc}", file=sys.stderr)
            return 2
        stats = replay_random(book, games=args.games, seed=args.seed)
        print(
            f"games={stats.games} black_wins={stats.black_wins}"
            f" max_stone={stats.max_stone} mean_stone={stats.mean_stone:.2f}"
            f" digest={stats.digest[:16]}"
        )
        for line in stats.failures[:20]:
            print(f"failure={line}")
        return 0 if stats.black_wins == stats.games else 1
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(verification_obj(script, bookrep), fh, indent=1)
        except OSError as exc:
            print(f"error=io detail={exc}", file=sys.stderr)
            return 2
    return code


def _render(board: Board) -> str:
    size = board.size
    cells = {c: color for c, color in board.history}
    last = board.history[-1][0] if board.history else None
    lines = ["    " + " ".join(column_letter(i) for i in range(size))]
    for row in range(size - 1, -1, -1):
        out = [f"{row + 1:>3} "]
        for col in range(size):
            c = Coord(col, row)
            color = cells.get(c)
            mark = "." if color is None else ("X" if color is Color.BLACK else "O")
            if c == last:
                mark = mark.lower() if color is Color.WHITE else "#"
            out.append(mark + " ")
        lines.append("".join(out).rstrip())
    return "\n".join(lines)


def cmd_play(args: argparse.Namespace) -> int:
    book = None
    if args.book:
        try:
            book = _load_book(args.book)
        except (OSError, StructuralError, json.JSONDecodeError) as exc:
            print(f"error=bad_book detail={exc}", file=sys.stderr)
            return 2
    session = EngineSession(book=book)
    print("You are White; the engine opens as Black. Enter coordinates like K9; q quits.")
    while True:
        if session.board.status.is_over:
            break
        if session.board.to_move is Color.BLACK:
            try:
                move = session.engine_black_move()
            except BookMiss as exc:
                print(f"error=book_miss detail={exc}", file=sys.stderr)
                return 2
            print(f"Black: {format_coord(move)}")
            print(_render(session.board))
            threats = winning_points(session.board, Color.BLACK)
            if threats and not session.board.status.is_over:
                print("Black threatens: " + " ".join(format_coord(t) for t in sorted(threats, key=row_major)))
            continue
        try:
            text = input("White> ").strip()
        except EOFError:
            print()
            return 0
        if text.lower() in ("q", "quit", "exit"):
            return 0
        if not text:
            continue
        try:
            session.white_move(parse_coord(text))
        except (MalformedInput, IllegalMove) as exc:
            print(f"invalid move: {exc}")
            continue
        print(_render(session.board))
    status = session.board.status
    if status.winner is Color.BLACK and status.square:
        corners = " ".join(format_coord(c) for c in status.square.corners())
        print(f"BLACK WINS with square {corners} at stone {status.winning_stone}")
    elif status.winner is Color.WHITE and status.square:
        corners = " ".join(format_coord(c) for c in status.square.corners())
        print(f"WHITE WINS with square {corners} at stone {status.winning_stone}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        book = _load_book(args.book)
    except (OSError, StructuralError, json.JSONDecodeError) as exc:
        print(f"error=bad_book detail={exc}", file=sys.stderr)
        return 2
    import uvicorn

    from .service import create_app

    app = create_app(book=book)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"error=bind detail={exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squarewar")
    sub = parser.add_subparsers(dest="command", required=True)
    default_book = os.environ.get(BOOK_ENV)

    p = sub.add_parser("solve", help="prove every case and emit book/report")
    p.add_argument("--mode", choices=("paper", "extended"), default="paper")
    p.add_argument("--max-stone", type=int, default=31)
    p.add_argument("--jobs", type=int, default=0, help="0 = all cores")
    p.add_argument("--book", help="write the strategy book here")
    p.add_argument("--report", help="write the solve report here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="independent re-checks")
    p.add_argument("what", choices=("script", "book", "replay"))
    p.add_argument("--book", default=default_book)
    p.add_argument("--games", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the verification JSON here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="play White against the engine in the terminal")
    p.add_argument("--book", default=default_book)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--book", default=default_book)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SquareWarError as exc:
        print(f"error={type(exc).__name__} detail={exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

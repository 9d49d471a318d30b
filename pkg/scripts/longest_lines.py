#!/usr/bin/env python3
"""Win-stone distribution of a strategy book, plus the principal
variation of its longest forced lines.

Reads out/book.json by default (run scripts/reproduce.py or
`squarewar solve --book out/book.json` first); solves in memory when
the file is missing.
"""

import argparse
import sys
from collections import Counter

from squarewar.book import StrategyBook, win_stone
from squarewar.coords import format_coord, row_major
from squarewar.solver import SolverConfig, solve_all


def principal_variation(root) -> str:
    parts = []
    node = root
    stone = 5
    while True:
        parts.append(f"b{stone}={format_coord(node.black_move)}")
        if node.win_at is not None:
            if node.win_at == stone + 2:
                threats = ",".join(
                    format_coord(t) for t in sorted(node.threats, key=row_major)
                )
                parts.append(f"double[{threats}]")
            parts.append(f"win@{node.win_at}")
            return " ".join(parts)
        ((block, child),) = node.replies.items()
        parts.append(f"w{stone + 1}={format_coord(block)}")
        node = child
        stone += 2


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--book", default="out/book.json")
    ap.add_argument("--limit", type=int, default=10, help="lines to print")
    args = ap.parse_args()
    try:
        book = StrategyBook.load(args.book)
    except OSError:
        print(f"no readable book at {args.book}; solving in memory")
        _, book = solve_all(SolverConfig())
    stones = {key: win_stone(root) for key, root in book.cases.items()}
    hist = Counter(stones.values())
    print(f"cases={len(stones)}")
    print("histogram=" + ",".join(f"{k}:{v}" for k, v in sorted(hist.items())))
    deepest = max(hist)
    picks = sorted(
        (key for key, s in stones.items() if s == deepest),
        key=lambda key: (row_major(key[0]), row_major(key[1])),
    )
    print(f"longest lines (win at stone {deepest}, {len(picks)} cases):")
    for stone2, stone4 in picks[: args.limit]:
        pv = principal_variation(book.cases[(stone2, stone4)])
        print(f"  {format_coord(stone2)}/{format_coord(stone4)}: {pv}")
    if len(picks) > args.limit:
        print(f"  ... {len(picks) - args.limit} more")
    return 0


if __name__ == "__main__":
    sys.exit(main())

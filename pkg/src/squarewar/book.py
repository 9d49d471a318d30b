"""Proof trees, the strategy book, and their JSON forms.

A ProofNode records one Black move of a forced line together with the
threats it creates.  An inner node has exactly one live threat, so the
only White reply that does not lose immediately is the block, and the
single child continues from there.  A leaf either completes a square on
the spot (win_at equals its own stone number) or leaves two or more
threats that one White stone cannot cover (win_at is two stones later).

Book files are deterministic: cases sorted row-major by (stone2, stone4),
threats sorted row-major, no timestamps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .coords import Coord, format_coord, parse_coord, row_major
from .errors import StructuralError

BOOK_FORMAT_VERSION = "1"


@dataclass
class ProofNode:
    black_move: Coord
    threats: tuple[Coord, ...]  # sorted row-major
    win_at: Optional[int] = None
    replies: dict[Coord, "ProofNode"] = field(default_factory=dict)

    def is_win(self) -> bool:
        return self.win_at is not None


def win_stone(root: ProofNode) -> int:
    """The stone number at which this proof's principal line completes a
    square; the deepest node carries it."""
    node = root
    while not node.is_win():
        (node,) = node.replies.values()
    return node.win_at


def proof_depth(root: ProofNode) -> int:
    depth = 1
    node = root
    while not node.is_win():
        (node,) = node.replies.values()
        depth += 1
    return depth


@dataclass
class StrategyBook:
    size: int = 19
    mode: str = "paper"
    max_stone: int = 31
    version: str = BOOK_FORMAT_VERSION
    cases: dict[tuple[Coord, Coord], ProofNode] = field(default_factory=dict)

    def lookup(self, stone2: Coord, stone4: Coord) -> Optional[ProofNode]:
        return self.cases.get((stone2, stone4))

    def sorted_cases(self) -> list[tuple[tuple[Coord, Coord], ProofNode]]:
        return sorted(
            self.cases.items(),
            key=lambda kv: (row_major(kv[0][0]), row_major(kv[0][1])),
        )

    def to_obj(self) -> dict:
        return {
            "meta": {
                "n": self.size,
                "mode": self.mode,
                "m": self.max_stone,
                "version": self.version,
            },
            "cases": [
                {
                    "stone2": format_coord(s2),
                    "stone4": format_coord(s4),
                    "root": _node_to_obj(root),
                }
                for (s2, s4), root in self.sorted_cases()
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "StrategyBook":
        try:
            meta = obj["meta"]
            size = int(meta["n"])
            book = cls(
                size=size,
                mode=str(meta["mode"]),
                max_stone=int(meta["m"]),
                version=str(meta["version"]),
            )
            for case in obj["cases"]:
                s2 = parse_coord(case["stone2"], size)
                s4 = parse_coord(case["stone4"], size)
                book.cases[(s2, s4)] = _node_from_obj(case["root"], size)
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed strategy book: {exc}") from exc
        return book

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=1)

    @classmethod
    def loads(cls, text: str) -> "StrategyBook":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructuralError(f"book is not valid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise StructuralError("book root must be a JSON object")
        return cls.from_obj(obj)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path: str) -> "StrategyBook":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.loads(fh.read())


def _node_to_obj(node: ProofNode) -> dict:
    return {
        "black": format_coord(node.black_move),
        "threats": [format_coord(t) for t in node.threats],
        "win_at": node.win_at,
        "replies": {
            format_coord(w): _node_to_obj(child)
            for w, child in sorted(node.replies.items(), key=lambda kv: row_major(kv[0]))
        },
    }


def _node_from_obj(obj: dict, size: int) -> ProofNode:
    win_at = obj["win_at"]
    if win_at is not None:
        win_at = int(win_at)
    return ProofNode(
        black_move=parse_coord(obj["black"], size),
        threats=tuple(parse_coord(t, size) for t in obj["threats"]),
        win_at=win_at,
        replies={
            parse_coord(w, size): _node_from_obj(child, size)
            for w, child in obj["replies"].items()
        },
    )


@dataclass
class SolveReport:
    c_e: int
    c_w: int
    w_a: bool
    max_win_stone: int
    histogram: dict[int, int]
    elapsed_ms: int
    unproved: tuple[tuple[Coord, Coord], ...] = ()

    def to_obj(self) -> dict:
        return {
            "c_e": self.c_e,
            "c_w": self.c_w,
            "w_a": self.w_a,
            "max_win_stone": self.max_win_stone,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=1)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    def semantic_key(self) -> tuple:
        """Everything except wall-clock time, for determinism comparisons."""
        return (
            self.c_e,
            self.c_w,
            self.w_a,
            self.max_win_stone,
            tuple(sorted(self.histogram.items())),
            self.unproved,
        )

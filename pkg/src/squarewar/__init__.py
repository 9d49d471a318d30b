"""Square War: engine, forced-win prover and verifier for the
first-player square-building win on odd boards."""

from .board import Board, GameStatus, completed_square, parse_moves, winning_points
from .book import ProofNode, SolveReport, StrategyBook, proof_depth, win_stone
from .coords import Color, Coord, DEFAULT_SIZE, center, format_coord, parse_coord
from .engine import EngineSession, Mode
from .errors import (
    BookMiss,
    GameOver,
    IllegalMove,
    MalformedInput,
    Occupied,
    OutOfBounds,
    PreconditionViolation,
    Rule4Violation,
    SquareWarError,
    StructuralError,
    ValidationFailure,
)
from .geometry import Square, WSet, build_W, iso_right_completions, squares_through
from .solver import SolverConfig, candidate_moves, solve_all, solve_case
from .symmetry import Transform, apply_transform, canonical_replies, canonicalize_reply
from .tactic import Case, classify_case, opening_move, script_moves, scripted_black_move
from .verify import replay_random, validate_book, verify_script_all

__version__ = "0.1.0"

__all__ = [
    "Board",
    "BookMiss",
    "Case",
    "Color",
    "Coord",
    "DEFAULT_SIZE",
    "EngineSession",
    "GameOver",
    "GameStatus",
    "IllegalMove",
    "MalformedInput",
    "Mode",
    "Occupied",
    "OutOfBounds",
    "PreconditionViolation",
    "ProofNode",
    "Rule4Violation",
    "SolveReport",
    "SolverConfig",
    "Square",
    "SquareWarError",
    "StrategyBook",
    "StructuralError",
    "Transform",
    "ValidationFailure",
    "WSet",
    "apply_transform",
    "build_W",
    "candidate_moves",
    "canonical_replies",
    "canonicalize_reply",
    "center",
    "classify_case",
    "completed_square",
    "format_coord",
    "iso_right_completions",
    "opening_move",
    "parse_coord",
    "parse_moves",
    "proof_depth",
    "replay_random",
    "scripted_black_move",
    "script_moves",
    "solve_all",
    "solve_case",
    "squares_through",
    "validate_book",
    "verify_script_all",
    "win_stone",
    "winning_points",
    "__version__",
]

"""Exception hierarchy shared by all squarewar modules."""


class SquareWarError(Exception):
    """Base class for every error raised by this package."""


class MalformedInput(SquareWarError, ValueError):
    """Input text that cannot be parsed as a coordinate or move list."""


class InvalidColumn(MalformedInput):
    pass


class InvalidRow(MalformedInput):
    pass


class IllegalMove(SquareWarError):
    """A placement that the rules forbid."""


class OutOfBounds(IllegalMove):
    pass


class Occupied(IllegalMove):
    pass


class Rule4Violation(IllegalMove):
    """Black's second stone must touch Black's first stone orthogonally."""


class GameOver(IllegalMove):
    """No stone may be placed once a side has completed a square."""


class NotBlacksTurn(SquareWarError):
    pass


class NotWhitesTurn(SquareWarError):
    pass


class TooLate(SquareWarError):
    """The opening helper was asked for a move past Black's second stone."""


class CenterNotCanonicalizable(SquareWarError):
    """The centre point is fixed by every board symmetry."""


class DegenerateInput(SquareWarError, ValueError):
    """Two coincident points where distinct points are required."""


class OutOfScript(SquareWarError):
    """The scripted forcing line does not apply to this position."""


class PreconditionViolation(SquareWarError):
    """A solver entry point was called outside its documented domain."""


class BookMiss(SquareWarError):
    """The strategy book has no entry for a position it should cover."""


class StructuralError(SquareWarError):
    """A strategy book file is syntactically or structurally malformed."""


class ValidationFailure(SquareWarError):
    """An independent re-check of a proof tree found a broken claim."""

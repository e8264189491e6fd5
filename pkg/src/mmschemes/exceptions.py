"""This module contains the exceptions raised by the scheme library."""

from enum import StrEnum


class SchemeError(Exception):
    """The base class for errors raised by scheme operations."""

    def __init__(self, message: str) -> None:
        """Creates a new instance of `SchemeError`.

        Args:
            message (str): Indicates the error that occurred.
        """
        self.message = message
        super().__init__(self.message)


class StructuralError(SchemeError):
    """The exception raised when a scheme, term or operand does not have the shape or form its format requires.

    This is distinct from a scheme that is well-formed but fails the Brent equations.
    """


class RingError(SchemeError):
    """The exception raised when the coefficient rings of the inputs to an operation are unsuitable."""


class FormatMismatchError(SchemeError):
    """The exception raised when two schemes cannot be composed because their formats are incompatible."""

    def __init__(self, message: str, left: tuple[int, int, int], right: tuple[int, int, int]) -> None:
        """Creates a new instance of `FormatMismatchError`.

        Args:
            message (str): Indicates the error that occurred.
            left (tuple[int, int, int]): The format of the first scheme.
            right (tuple[int, int, int]): The format of the second scheme.
        """
        self.left = left
        self.right = right
        super().__init__(message)


class InadmissibleMoveError(SchemeError):
    """The exception raised when a flip is applied to a scheme that does not admit it."""


class WalkRejectedError(SchemeError):
    """The exception raised when a flip-graph walk cannot start from the given scheme."""


class SearchInvariantError(SchemeError):
    """The exception raised when a walk checkpoint finds that the best scheme no longer verifies."""

    def __init__(self, step: int, violated: int) -> None:
        """Creates a new instance of `SearchInvariantError`.

        Args:
            step (int): The walk step at which the checkpoint ran.
            violated (int): The number of Brent equations that failed.
        """
        self.step = step
        self.violated = violated
        super().__init__(f"Best scheme failed certification at step {step}: {violated} violated equations")


class ParseErrorCode(StrEnum):
    """Distinct failure codes for scheme files."""

    BAD_ENCODING = "bad-encoding"
    BAD_LINE_ENDING = "bad-line-ending"
    MISSING_FINAL_NEWLINE = "missing-final-newline"
    MALFORMED_HEADER = "malformed-header"
    UNSUPPORTED_VERSION = "unsupported-version"
    BAD_RING = "bad-ring"
    BAD_INTEGER = "bad-integer"
    SHAPE_MISMATCH = "shape-mismatch"
    RESIDUE_OUT_OF_RANGE = "residue-out-of-range"
    MISSING_SEPARATOR = "missing-separator"
    TRUNCATED_BLOCK = "truncated-block"
    RANK_MISMATCH = "rank-mismatch"
    TRAILING_GARBAGE = "trailing-garbage"


class SchemeFileError(SchemeError):
    """The exception raised when a scheme file does not conform to the file grammar."""

    def __init__(self, code: ParseErrorCode, line: int | None, detail: str) -> None:
        """Creates a new instance of `SchemeFileError`.

        Args:
            code (ParseErrorCode): The failure code.
            line (int | None): The 1-based line number where the failure was detected, if any.
            detail (str): A description of the failure.
        """
        self.code = code
        self.line = line
        self.detail = detail
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{detail} [{code.value}]")

"""This module contains the exceptions and exit codes of the command-line interface."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes. Usage and I/O failures use the sysexits values."""

    OK = 0
    STRUCTURAL_ERROR = 1
    NEGATIVE_RESULT = 2
    USAGE = 64
    NO_INPUT = 66


class UsageError(Exception):
    """The exception raised when the command line is not usable as given."""

    def __init__(self, message: str) -> None:
        """Creates a new instance of `UsageError`.

        Args:
            message (str): Indicates the error that occurred.
        """
        self.message = message
        super().__init__(self.message)

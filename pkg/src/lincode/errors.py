"""Exceptions raised by the lincode library.

The CLI maps them to exit codes: ``ConsistencyError`` is an assertion
failure (exit 1), everything else is an input problem (exit 2).
"""

from __future__ import annotations


class LincodeError(Exception):
    """Base class for all library errors."""


class DimensionError(LincodeError, ValueError):
    """Operands do not have conformable dimensions."""


class NotInvertibleError(LincodeError, ValueError):
    """A matrix expected to lie in GL(k, 2) is singular."""


class OrderCapExceeded(LincodeError, RuntimeError):
    """matrix_order gave up before finding M^t == I."""


class EnumerationTooLarge(LincodeError, ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


class RankDeficientError(LincodeError, ValueError):
    """A generator matrix is not of full row rank."""


class TrivialCodeError(LincodeError, ValueError):
    """The code has dimension 0."""


class ExtensionError(LincodeError, ValueError):
    """The all-one extension would not increase the dimension."""


class DomainError(LincodeError, ValueError):
    """An argument lies outside its documented domain."""


class ConfigError(LincodeError, ValueError):
    """An environment variable holds an unusable value."""


class ConsistencyError(LincodeError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class FormatError(LincodeError, ValueError):
    """A text file does not follow its line format.

    ``line`` is the 1-based line number in the file, ``column`` the 1-based
    character position (0 when the whole line is at fault).
    """

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        super().__init__(message)
        self.line = line
        self.column = column

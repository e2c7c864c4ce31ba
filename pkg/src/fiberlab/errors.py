"""Exception hierarchy shared by every fiberlab module."""

from __future__ import annotations


class FiberlabError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(FiberlabError, ZeroDivisionError):
    pass


class NonSquare(FiberlabError, ValueError):
    pass


class BothZero(FiberlabError, ValueError):
    pass


class NonConvergence(FiberlabError, RuntimeError):
    pass


class PresentationError(FiberlabError, ValueError):
    """Validation failure while reading a presentation; carries a position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class PresentationSyntaxError(PresentationError):
    pass


class UnknownSymbol(PresentationError):
    pass


class BasisNotClosed(PresentationError):
    pass


class HopfMapInconsistent(PresentationError):
    pass


class StepCapExceeded(FiberlabError, RuntimeError):
    pass


class CertificationFailed(FiberlabError, RuntimeError):
    pass


class MissingCoalgebraData(FiberlabError, ValueError):
    pass


class UnsupportedCentralShape(FiberlabError, ValueError):
    pass


class CHViolation(FiberlabError, AssertionError):
    def __init__(self, message: str, element=None):
        self.element = element
        super().__init__(message)


class UnrecognizedRoot(FiberlabError, ValueError):
    pass


class ConsistencyViolation(FiberlabError, AssertionError):
    pass


class IdentityViolation(FiberlabError, AssertionError):
    pass


class PartitionMismatch(FiberlabError, AssertionError):
    pass

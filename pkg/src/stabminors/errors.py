"""Exception hierarchy shared by every module.

Two families matter to callers. ``ParseError`` covers malformed textual
input (the CLI maps it to exit code 2). ``DomainError`` covers well-formed
input that is mathematically invalid, e.g. non-commuting generators or a
vector that is not on the principal-minor variety (exit code 3).
"""

from __future__ import annotations


class StabMinorsError(Exception):
    """Base class for all package errors."""


class ParseError(StabMinorsError, ValueError):
    """Malformed textual input."""


class DomainError(StabMinorsError, ValueError):
    """Input is well formed but violates a mathematical precondition."""


class SizeMismatch(DomainError):
    def __init__(self, left: int, right: int, what: str = "size"):
        super().__init__(f"{what} mismatch: {left} != {right}")
        self.left = left
        self.right = right


class NotSquare(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class BoundExceeded(DomainError):
    pass


class NotCommuting(DomainError):
    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i + 1} and {j + 1} do not commute")
        self.i = i
        self.j = j


class NotIndependent(DomainError):
    pass


class WrongCount(DomainError):
    pass


class NotAStabilizerStateGroup(DomainError):
    pass


class NotIsotropic(DomainError):
    pass


class NotSymmetric(DomainError):
    pass


class NotChartPoint(DomainError):
    pass


class InconsistentPoint(DomainError):
    pass


class NotOnVariety(DomainError):
    pass


class LoopsPresent(DomainError):
    pass


class ResidualTooLarge(StabMinorsError, RuntimeError):
    """Internal consistency trap in the dense state oracle."""

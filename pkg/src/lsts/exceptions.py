"""Exception hierarchy for locally sparse triple systems"""

from typing import Optional


class LSTSError(Exception):
    """Base class for all library errors"""


class FormatError(LSTSError, ValueError):
    """Malformed .3g input"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class PreconditionError(LSTSError):
    """An audit was asked to run on a system that is not free of its family"""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class GuardExceededError(LSTSError):
    """Instance too large for an exhaustive routine"""


class InfeasibleProgramError(LSTSError):
    """Linear program has no feasible point"""


class UnboundedProgramError(LSTSError):
    """Linear program objective is unbounded above"""

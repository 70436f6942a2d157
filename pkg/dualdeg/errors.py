"""
Exception hierarchy shared by every dualdeg module.

Verification failures are never raised; they are reported as failed checks.
"""


class DualDegError(Exception):
    """Root of all dualdeg errors."""


class PreconditionError(DualDegError, ValueError):
    """An operation was called outside its domain (bad arity, range, parity...)."""


class GuardExceededError(PreconditionError):
    """An exhaustive computation would exceed a configured size guard."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        super().__init__(f"{what} = {value} exceeds the configured limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class SolverError(DualDegError):
    """A solver reached a state that exact arithmetic says is impossible, or ran out of precision."""

"""Exception hierarchy shared by the services, the CLI and the REST layer."""
from typing import Optional


class ArasonError(Exception):
    """Base class for every error raised on purpose by arasonlab."""


class PreconditionError(ArasonError, ValueError):
    """A mathematical precondition of an operation does not hold.

    ``invariant`` names the violated condition in a form that can be shown
    to a user, e.g. ``"discriminant algebras differ"``.
    """

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.invariant = invariant or message

    def to_dict(self) -> dict:
        return {"status": "error", "error": "precondition", "invariant": self.invariant, "message": str(self)}


class WitnessNotFoundError(ArasonError):
    """The decision procedure answered yes but the bounded witness search failed."""

    def __init__(self, message: str, searched: int = 0):
        super().__init__(message)
        self.searched = searched


class TheoremViolation(ArasonError, AssertionError):
    """Two independent computations of the same invariant disagree."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.details = details or {}


class UsageError(ArasonError, ValueError):
    """Malformed invocation: unknown operation, wrong arity or unreadable JSON."""

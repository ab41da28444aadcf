"""Exception types raised across the package."""


class PCoreError(Exception):
    """Base class for all errors raised by pcore."""


class InvalidModulus(PCoreError, ValueError):
    """Raised when p is outside the range an operation accepts."""


class NotPrime(InvalidModulus):
    pass


class NotOdd(InvalidModulus):
    pass


class NotPCore(PCoreError, ValueError):
    pass


class NotPPrime(PCoreError, ValueError):
    pass


class RevisitsZero(PCoreError, ValueError):
    """A walk on the residue graph returned to vertex 0."""


class PreconditionFailed(PCoreError, ValueError):
    pass


class FeasibilityRefused(PCoreError):
    """Exhaustive search requested for a modulus that is too large."""


class InvariantViolation(PCoreError, AssertionError):
    """A proven property failed to hold; indicates a bug, never bad input."""

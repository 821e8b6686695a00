"""Exception hierarchy."""


class ColorfulError(Exception):
    """Base class for all errors raised by this package."""


class InstanceError(ColorfulError):
    """Malformed or invalid instance data."""


class PreconditionError(ColorfulError):
    """An operation was called on input violating its precondition."""


class DegenerateInstanceError(ColorfulError):
    """General position could not be restored."""


class SizeLimitError(ColorfulError):
    """Input exceeds an enumeration budget."""


class StepLimitError(ColorfulError):
    """Local search exceeded its step budget; ``trace`` holds the partial run."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class InvariantError(ColorfulError):
    """A runtime-asserted algorithm invariant failed (a bug, not bad input)."""

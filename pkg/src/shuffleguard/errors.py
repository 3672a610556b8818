"""Exception types shared across the toolkit."""


class ShuffleGuardError(ValueError):
    """Base class for all toolkit errors."""


class DomainError(ShuffleGuardError):
    """An argument is outside the domain an operation is defined on."""


class NotCoprime(ShuffleGuardError):
    """Modular inverse requested for non-coprime operands."""


class DimensionMismatch(ShuffleGuardError):
    """Vector/matrix dimensions do not agree."""


class LengthMismatch(ShuffleGuardError):
    """Paired sequences have different lengths."""


class RangeError(ShuffleGuardError):
    """A sample range is empty or falls outside the trace."""


class LayoutError(ShuffleGuardError):
    """The trace layout lacks the ranges an operation needs."""

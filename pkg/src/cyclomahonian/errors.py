"""Exception types shared across the package."""


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured enumeration cap."""


class BijectionError(RuntimeError):
    """Raised when the word/permutation correspondence hits an impossible state."""

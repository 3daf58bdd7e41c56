"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed user input: bad file, dimension mismatch, unknown name."""


class NotDisjointError(RuntimeError):
    """Separation was requested for nets whose languages overlap."""


class BudgetExceededError(RuntimeError):
    """An exhaustive exploration hit its node budget; the result would be partial."""

"""Exception types raised across the package."""


class InvalidInputError(ValueError):
    """Input violates a documented precondition (shape, finiteness, normalization)."""


class RegimeError(InvalidInputError):
    """Dimensions fall outside the regime where the genericity bound applies."""


class NotDecidableError(ValueError):
    """A report lacks the bound needed to decide an LOCC question."""


class StateFormatError(InvalidInputError):
    """A state file is malformed. ``path`` is the JSON path of the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")

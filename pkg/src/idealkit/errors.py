"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed text input; carries a 1-based column when one is known."""

    def __init__(self, message, column=None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class ResourceCapError(RuntimeError):
    """A computation exceeded one of its configured resource caps."""

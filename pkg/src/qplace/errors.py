"""Exception types raised by the loaders, placement search and CLI."""


class QplaceError(ValueError):
    """Base class for input validation problems."""


class ParseError(QplaceError):
    """Malformed text input. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(QplaceError):
    """Well-formed input that violates a structural invariant."""


class CapacityError(QplaceError):
    """The circuit has more wires than the hardware has qubits."""

"""Exception hierarchy shared by all modules."""


class RainbowError(Exception):
    """Base class for package errors."""


class DomainError(RainbowError, ValueError):
    """Arguments outside the domain where an operation is defined."""


class ResourceError(RainbowError, RuntimeError):
    """A configured size or enumeration budget would be exceeded."""


class FormatError(RainbowError, ValueError):
    """Malformed ``.ecg`` input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(RainbowError, RuntimeError):
    """A checked mathematical claim turned out false."""

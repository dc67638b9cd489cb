"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands have incompatible matrix sizes or tensor orders."""


class DomainError(ValueError):
    """A value is outside the domain an operation is defined on."""


class FileFormatError(ValueError):
    """A data file is malformed.  Carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

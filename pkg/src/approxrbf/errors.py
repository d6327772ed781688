"""Exception hierarchy shared across the package."""


class ApproxRbfError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ApproxRbfError):
    """Malformed input file. Carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FormatVersionError(ParseError):
    """Compact-model file with an unknown version tag."""


class UnsupportedModelError(ApproxRbfError):
    """Model file uses a kernel or SVM type outside the supported set."""


class DimensionError(ApproxRbfError):
    """Instance has feature indices beyond the model dimension."""

"""Exception hierarchy shared across the package."""


class NetspectError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(NetspectError):
    """Invalid model or simulation parameter."""


class ParseError(NetspectError):
    """Malformed input file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InputError(NetspectError):
    """Structurally invalid input to an inference or metric routine."""


class FitError(NetspectError):
    """Regression could not be performed (e.g. too few distinct degrees)."""


class ConfigError(NetspectError):
    """Invalid or unresolvable experiment configuration."""

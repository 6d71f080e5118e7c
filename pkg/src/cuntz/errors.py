"""Exception taxonomy shared by the whole workbench."""


class CuError(Exception):
    """Base class for all workbench errors."""


class MixedInstance(CuError):
    """Raised when an operation receives elements of different instances."""


class InvalidChain(CuError):
    """Raised when an ascending chain violates its invariants."""


class CapabilityMissing(CuError):
    """Raised when an instance lacks a capability an operation requires."""


class GridTooLarge(CuError):
    """Raised when an enumeration would exceed the configured bound."""


class UnknownProperty(CuError):
    """Raised for an unrecognized property identifier."""


class NotFull(CuError):
    """Raised when a comparison unit fails the fullness check."""


class NotRealizable(CuError):
    """Raised when no soft element can match the rank of the given one."""


class NotAnEmbedding(CuError):
    """Raised when a declared inclusion fails its order-embedding audit."""


class SpecError(CuError):
    """Base class for instance-description errors; carries a location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", col {column}" if column is not None else "") + f": {message}"
        super().__init__(message)


class ParseError(SpecError):
    """Malformed token stream in an instance description."""


class ResolveError(SpecError):
    """A name referenced in an instance description does not resolve."""


class ValidationError(SpecError):
    """A literal parses but violates an instance invariant."""

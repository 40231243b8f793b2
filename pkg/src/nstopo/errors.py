"""Exception hierarchy shared by every module of the package."""


class NSError(Exception):
    """Base class for all errors raised by nstopo."""


class InvalidDegreeError(NSError, ValueError):
    pass


class InvalidUniverseError(NSError, ValueError):
    pass


class UniverseMismatchError(NSError, ValueError):
    pass


class EmptyArgumentError(NSError, ValueError):
    pass


class MissingUniverseError(NSError, ValueError):
    pass


class NotATopologyError(NSError, ValueError):
    pass


class ResourceLimitError(NSError):
    """A combinatorial enumeration would exceed the configured size cap."""


class ParseError(NSError, ValueError):
    """Malformed literal or script. ``line``/``column`` are 1-based."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None and self.column is not None:
            return f"line {self.line}, column {self.column}: {self.message}"
        if self.column is not None:
            return f"column {self.column}: {self.message}"
        return self.message

    def shifted(self, line: int, column_offset: int) -> "ParseError":
        """Re-anchor an error raised on a literal to its place in a script."""
        col = (self.column or 1) + column_offset
        return ParseError(self.message, line, col)

"""Exception types shared across the package."""


class EsgridError(Exception):
    """Base class for all esgrid errors."""


class VerticalLine(EsgridError):
    """A slope query was made on a vertical line."""


class EmptySet(EsgridError):
    """An operation requiring a non-empty point set got an empty one."""


class DuplicatePoint(EsgridError):
    """A point set contained the same point twice."""


class DuplicateX(EsgridError):
    """Cup/cap search requires pairwise distinct x-coordinates."""


class NotGeneralPosition(EsgridError):
    """Three collinear points were found where general position is required."""

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"collinear triple: {witness}")


class TooLarge(EsgridError):
    """Input exceeds the size guard of an exponential-time oracle."""


class ParseError(EsgridError):
    """Malformed serialized point set."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConstructionFailed(EsgridError):
    """A construction search exceeded its provably safe bound (logic error)."""

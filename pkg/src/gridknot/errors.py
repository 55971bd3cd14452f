"""Exception hierarchy shared across the package."""


class GridKnotError(Exception):
    """Base class for all domain errors raised by this package."""


class BadLength(GridKnotError):
    """Marker sequence length does not match the grid number."""


class NotPermutation(GridKnotError):
    """A marker sequence repeats or omits a row index."""


class SharedSquare(GridKnotError):
    """An X and an O occupy the same square."""


class GridSyntaxError(GridKnotError):
    """Malformed text input; carries the offending line and column."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        loc = ""
        if self.line is not None:
            loc = f" (line {self.line}"
            loc += f", column {self.column})" if self.column is not None else ")"
        return super().__str__() + loc


class IndexOutOfRange(GridKnotError):
    """A move names a row or column outside the grid."""


class IllegalCommutation(GridKnotError):
    """Adjacent rows/columns fail the distinctness or interleaving test."""


class NoSuchBlock(GridKnotError):
    """Destabilization names a 2x2 block that does not match its pattern."""


class StrandMismatch(GridKnotError):
    """Braid operands live in braid groups of different index."""


class NotDestabilizable(GridKnotError):
    """The braid word does not end in a removable top-strand crossing."""


class NoExchangePattern(GridKnotError):
    """The braid word does not factor for an exchange move."""


class MalformedDiagram(GridKnotError):
    """A rectilinear diagram violates the strand-slice invariant."""


class UnsupportedClass(GridKnotError):
    """Operation restricted to a particular move class."""

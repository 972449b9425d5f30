"""Exception types shared across the package."""


class SimpleTriError(Exception):
    """Base class for all errors raised by this package."""


class CycleError(SimpleTriError):
    """A relation closure would relate an element to itself."""


class SizeMismatch(SimpleTriError):
    """Two arguments disagree on the size of the ground set."""


class NotAnExtension(SimpleTriError):
    """The given ordering is not a linear extension of the order."""


class NotComparabilityOrdering(SimpleTriError):
    """Orienting by the ordering did not produce a transitive relation."""


class NotApexOrdering(SimpleTriError):
    """The ordering contains a forbidden pattern or yields an anticycle."""


class EdgeSetMismatch(SimpleTriError):
    """An orientation does not cover exactly the expected edge set."""


class LimitExceeded(SimpleTriError):
    """The instance is larger than the documented brute-force limit."""


class NotSimpleTriangle(SimpleTriError):
    """The operation requires a graph accepted by the recognizer."""


class ParseError(SimpleTriError):
    """Malformed input file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoop(ParseError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(ParseError):
    """The same edge appears more than once."""

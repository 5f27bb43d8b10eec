"""Error types raised by the toolkit.

Every domain error is a ``ValueError`` so callers that only care about bad
input can catch one type; the CLI maps all of them to exit code 1.
"""


class ToolkitError(ValueError):
    """Base class for documented domain errors."""


class InconsistentCounts(ToolkitError):
    """Inclusion-exclusion inputs whose alternating sum is negative."""


class RepeatedRoots(ToolkitError):
    """Characteristic roots closer than the root tolerance."""


class RepeatedFactor(ToolkitError):
    """A denominator with a repeated linear factor."""


class NoWalk(ToolkitError):
    """The graph has no Eulerian walk."""


class Disconnected(ToolkitError):
    """The operation needs a connected graph."""


class NotBipartite(ToolkitError):
    pass


class NotComplete(ToolkitError):
    pass


class NotSimple(ToolkitError):
    """Multigraph or looped graph passed where a simple graph is required."""


class InvalidPath(ToolkitError):
    """Not an augmenting path for the given matching."""


class SizeCapExceeded(ToolkitError):
    """Input too large for an exhaustive search."""


class BoundaryPoint(ToolkitError):
    """Point lies exactly on a circle."""


class NotAPermutation(ToolkitError):
    pass


class PrecisionWindowExceeded(ToolkitError):
    """Floating point evaluation requested outside its validity window."""


class GraphFormatError(ToolkitError):
    """Malformed graph text; ``line`` is the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line

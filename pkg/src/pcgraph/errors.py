"""Exception types shared across the package."""


class PcgraphError(Exception):
    """Base class for all library-specific errors."""


class GraphError(PcgraphError, ValueError):
    """Invalid graph construction or an argument outside the graph."""


class ParseError(PcgraphError):
    """Malformed text input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class InvalidWalkError(PcgraphError, ValueError):
    """A walk that is structurally invalid in the given graph."""


class CapacityError(PcgraphError):
    """Instance exceeds a configured exhaustive-search bound."""


class InfeasibleSeparatorError(PcgraphError):
    """x and y are adjacent, so no internal vertex set can separate them."""


class UnsupportedTransformError(PcgraphError):
    """Input outside the domain of a reduction (wrong color count etc.)."""


class NotTypeFourError(PcgraphError):
    """The structural preconditions of the fast separator solver failed.

    Carries a diagnostic naming the first failed check; callers should fall
    back to the brute-force route.
    """

    def __init__(self, diagnostic: str):
        super().__init__(diagnostic)
        self.diagnostic = diagnostic


class InvariantViolation(PcgraphError):
    """Two internal routes disagreed; always a bug, never user error."""

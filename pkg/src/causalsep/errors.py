"""Exception types shared across the library."""

from __future__ import annotations


class CausalSepError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(CausalSepError, ValueError):
    """Invalid graph construction input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class WeightLengthMismatch(GraphError):
    pass


class NegativeWeight(GraphError):
    pass


class InvalidWeight(GraphError):
    """Weight is not a finite number."""


class IntervalMismatch(GraphError):
    """Supplied intervals do not reproduce the supplied edge set."""


class VertexOutOfRange(GraphError):
    pass


class NotChordal(CausalSepError):
    """Graph admits no perfect elimination ordering.

    ``vertex`` is the vertex at which recognition failed; ``cycle`` is a
    chordless cycle of length >= 4 when one was cheaply recoverable.
    """

    def __init__(self, message: str, vertex: int | None = None,
                 cycle: tuple[int, ...] | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.cycle = cycle


class InvalidPeo(CausalSepError, ValueError):
    """Ordering is not a perfect elimination ordering for the graph."""


class NoIntervals(CausalSepError, ValueError):
    """Operation requires an interval representation the graph lacks."""


class InvalidK(CausalSepError, ValueError):
    pass


class DuplicateLabel(CausalSepError, ValueError):
    pass


class LabelLengthMismatch(CausalSepError, ValueError):
    pass


class NotEnoughLabels(CausalSepError, ValueError):
    pass


class NotSeparating(CausalSepError):
    """Design fails to separate some edge; ``edge`` is one violated edge."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


class InsufficientInterventions(CausalSepError, ValueError):
    """Budget m is below the minimum separating-system size ceil(log2 chi)."""


class BudgetExceeded(CausalSepError):
    """Exact search ran out of node budget; ``incumbent`` holds the best
    result found so far, flagged non-optimal."""

    def __init__(self, message: str, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


class TooLarge(CausalSepError, ValueError):
    """Instance exceeds the size guard of an exhaustive oracle operation."""


class InconsistentEvidence(CausalSepError, ValueError):
    """Evidence orients a non-edge or orients an edge both ways."""

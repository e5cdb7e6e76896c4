"""Exception hierarchy shared across the package."""


class MecError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(MecError):
    """Input graph violates a structural precondition."""


class NotChordalError(InvalidGraphError):
    """A graph (or chain component) that must be chordal is not."""


class DisconnectedError(InvalidGraphError):
    """A graph that must be connected is not."""


class PartiallyDirectedCycleError(InvalidGraphError):
    """The mixed graph contains a partially directed cycle (not a chain graph)."""


class DirectedCycleError(InvalidGraphError):
    """The directed part of the graph contains a cycle."""


class NotDagError(InvalidGraphError):
    """Operation requires a fully directed acyclic graph."""


class UnknownVertexError(InvalidGraphError):
    """A referenced vertex is not in the graph."""


class VertexSetMismatchError(InvalidGraphError):
    """Two graphs that must share a vertex set do not."""


class InconsistentOrientationError(MecError):
    """Orientation closure demanded the reversal of an existing directed edge."""


class MalformedHypothesisError(MecError):
    """A prior-knowledge constraint refers to a non-edge or contradicts itself."""


class UnrealizableHypothesisError(MecError):
    """No member of the equivalence class is consistent with the hypothesis."""


class EnumerationLimitError(MecError):
    """Brute-force enumeration would exceed the configured member limit."""


class InfeasibleParameterError(MecError):
    """Requested parameters are outside the feasible range (e.g. edge count)."""

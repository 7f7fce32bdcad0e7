"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(GraphError):
    """An argument is outside its legal range (bad vertex, bad index, ...)."""


class InvalidLabelingError(GraphError):
    """A labeling is not a bijection on the graph's vertex set."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; the message carries the offending line number."""


class PreconditionError(GraphError):
    """An operation's structural precondition does not hold for the input."""


class NotConnectedError(PreconditionError):
    """The operation requires a connected graph."""


class NotClosedError(PreconditionError):
    """The operation requires a closed (labeling of the) graph."""


class ExchangeabilityError(GraphError):
    """The two vertices do not share a full neighborhood."""


class OracleLimitError(GraphError):
    """The graph exceeds the configured brute-force bound."""


class InvalidSequenceError(GraphError):
    """A link-sequence family violates the constraints of its layer partition."""


class EmptyLinkError(GraphError):
    """The requested layer vertex has no forward edges, so no forward interval."""

"""Exception types shared across the package."""


class TriaugError(Exception):
    """Base class for all errors raised by triaug."""


class GraphInputError(TriaugError, ValueError):
    """Malformed graph input (bad ids, loops, duplicates, bad parameters)."""


class SelfLoopError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class VertexRangeError(GraphInputError):
    pass


class NotATreeError(TriaugError, ValueError):
    """The given graph is not a tree (disconnected or has a cycle)."""


class ContractViolationError(TriaugError, ValueError):
    """An operation was called outside its stated precondition."""


class BudgetError(TriaugError, ValueError):
    """Input exceeds the size limit of an exhaustive routine."""


class VerificationError(TriaugError, RuntimeError):
    """Post-hoc connectivity verification of an augmentation failed."""

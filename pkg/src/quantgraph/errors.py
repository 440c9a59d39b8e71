"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`QuantGraphError`.
Input-validation errors additionally derive from :class:`ValueError`.
"""


class QuantGraphError(Exception):
    """Base class for library errors."""


class InvalidGeometryError(QuantGraphError, ValueError):
    """Non-positive or non-finite edge length, or malformed edge list."""


class InvalidPartitionError(QuantGraphError, ValueError):
    """Endpoint partition is not a partition of {1, ..., 2N}."""


class InvalidConditionError(QuantGraphError, ValueError):
    """Vertex matrix has the wrong shape or is not unitary."""


class UnsupportedConditionError(QuantGraphError):
    """Operation needs Hermitian (scaling-invariant) vertex conditions."""


class DomainError(QuantGraphError, ValueError):
    """Argument outside the domain of the operation."""


class NotAnEigenvalueError(QuantGraphError):
    """Requested k is not a root of the secular system."""


class RootRefinementError(QuantGraphError):
    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class SymmetryUnavailableError(QuantGraphError):
    """The reflection J does not commute with the vertex conditions."""


class BranchAmbiguityError(QuantGraphError):
    def __init__(self, message, theta=None):
        super().__init__(message)
        self.theta = theta


class StepTooCoarseError(QuantGraphError):
    def __init__(self, message, theta=None, suggested_steps=None):
        super().__init__(message)
        self.theta = theta
        self.suggested_steps = suggested_steps


class DocumentError(QuantGraphError, ValueError):
    """Malformed graph document."""

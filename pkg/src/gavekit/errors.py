"""Exception types shared across the toolkit."""


class GavekitError(Exception):
    """Base class for all toolkit errors."""


class SingularError(GavekitError):
    """A matrix was treated as singular (pivot below the threshold)."""


class NotSymmetricError(GavekitError):
    """A symmetric-only operation was invoked on a nonsymmetric matrix."""


class ConvergenceError(GavekitError):
    """An iteration reached its cap without meeting the convergence test."""


class CapExceededError(GavekitError):
    """The problem dimension exceeds the exponential-cost cap."""


class ProblemFormatError(GavekitError):
    """A problem description (JSON or arrays) is malformed."""


class NoConvergenceError(GavekitError):
    """An iterative solver gave up; carries the last iterate and residual."""

    def __init__(self, message, last_iterate=None, residual=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual = residual


class GavmeColumnError(GavekitError):
    """A column solve of a matrix-unknown problem failed."""

    def __init__(self, column, cause):
        super().__init__(f"column {column}: {cause}")
        self.column = column
        self.cause = cause

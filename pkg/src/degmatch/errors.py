"""Exception types shared across the package.

Every domain error carries a short machine-readable ``code`` so the CLI can
emit stable one-line diagnostics.
"""


class DegmatchError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "INTERNAL"


class ValidationError(DegmatchError, ValueError):
    """Malformed or out-of-range input."""

    code = "VALIDATION"


class NotGraphicError(DegmatchError, ValueError):
    """An operation that requires a graphic sequence received a non-graphic one."""

    code = "NOT_GRAPHIC"

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InfeasibleDeltaError(DegmatchError, ValueError):
    """Requested growth degree cannot be realized in the current graph."""

    code = "INFEASIBLE_DELTA"

    def __init__(self, message, feasible=()):
        super().__init__(message)
        self.feasible = tuple(sorted(feasible))


class CapExceededError(DegmatchError, RuntimeError):
    """Instance is too large for an exhaustive operation's configured cap."""

    code = "CAP_EXCEEDED"


class InternalConsistencyError(DegmatchError, RuntimeError):
    """Two independent computations of the same quantity disagreed."""

    code = "INTERNAL_CONSISTENCY"

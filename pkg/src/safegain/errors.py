"""Exception hierarchy shared across the package."""


class SafegainError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(SafegainError):
    """Matrix dimensions are inconsistent with the declared interconnection."""


class WellPosednessError(SafegainError):
    """I - D11*Delta is singular (or nearly so); the feedback loop is ill posed."""


class UnstableSystemError(SafegainError):
    """A norm computation was requested for a system that is not Hurwitz."""


class NonConvergenceError(SafegainError):
    """An iterative numerical routine exhausted its iteration budget."""


class SolverFailureError(SafegainError):
    """The SDP backend failed numerically.

    Deliberately distinct from infeasibility: a failed solve carries no
    information about the plant and must never drive set shrinking.
    """


class AllCellsInfeasibleError(SafegainError):
    """Every cell of a partition was certified infeasible; exploration aborted."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConfigurationError(SafegainError):
    """Inconsistent problem setup (e.g. secret parameter outside the declared box)."""


class ProblemFormatError(SafegainError):
    """A problem/secret/gain file failed to parse or validate."""

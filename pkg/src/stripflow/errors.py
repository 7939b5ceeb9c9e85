"""Exception types shared across the package.

Every failure mode raised on purpose derives from StripflowError so callers
(and the CLI exit-code mapping) can tell deliberate rejections from bugs.
"""


class StripflowError(Exception):
    """Base class for all deliberate stripflow failures."""


class InvalidParameterError(StripflowError, ValueError):
    """A constructor or operation received parameters violating its contract."""


class DomainError(StripflowError, ValueError):
    """A point lies outside the geometric or temporal domain of an evaluator."""


class EvaluationError(StripflowError):
    """A supplied function produced non-finite or otherwise unusable values."""


class ResolutionError(StripflowError):
    """Sampling is too coarse for the requested operation."""


class SolvabilityError(StripflowError):
    """The right boundary condition of the limit profile failed to emerge,
    signalling an inconsistency between the boundary law and the flux data."""


class ConsistencyError(StripflowError):
    """An internal identity that must hold by construction was violated."""


class CompatibilityError(StripflowError):
    """A boundary-layer zero-mean compatibility condition was violated."""


class GeometryCollapseError(StripflowError):
    """The free-boundary height reached zero or below; the map degenerates."""


class SolverConvergenceError(StripflowError):
    """The linear solve did not reach the requested residual tolerance."""


class PairingError(StripflowError):
    """Two objects that must share (eps, t) metadata do not."""


class InsufficientDataError(StripflowError):
    """Not enough data points for the requested fit or statistic."""


class RunAborted(StripflowError):
    """A time integration hit the geometry bound and stopped early.

    Carries the partial trajectory so callers can salvage completed output.
    """

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory


class TruncationWarning(UserWarning):
    """A spectral truncation is too short for the requested tail tolerance."""

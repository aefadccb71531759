"""Exception types shared across the package."""


class WillmoreflowError(Exception):
    """Base class for all package-specific errors."""


class AxisContact(WillmoreflowError):
    """A curve sample touches or crosses the x-axis where it must not."""


class BoundaryIndex(WillmoreflowError):
    """A pointwise operation was asked for an endpoint index it cannot serve."""


class InsufficientResolution(WillmoreflowError):
    """Too few samples for the requested quadrature."""


class BoundaryMismatch(WillmoreflowError):
    """Curve endpoints do not satisfy the prescribed clamp data."""

    def __init__(self, message, endpoint=None, deviation=None):
        super().__init__(message)
        self.endpoint = endpoint
        self.deviation = deviation


class ZeroOffset(WillmoreflowError):
    """The singularity abscissa is not finite for zero offset."""


class HalfCircleCase(WillmoreflowError):
    """The target lies at |x| = alpha, reached by a geodesic half circle."""


class BranchMismatch(WillmoreflowError):
    """The target abscissa lies outside the range of the requested branch."""


class UnboundedCap(WillmoreflowError):
    """A sphere cap degenerates to a vertical line (plane through infinity)."""


class StepFailure(WillmoreflowError):
    """Backtracking underflowed; the descent step could not be accepted."""

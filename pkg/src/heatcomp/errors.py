"""Exception types shared across the package."""


class HeatcompError(Exception):
    """Base class for all package-specific errors."""


class SpaceMismatchError(HeatcompError, ValueError):
    """Operands live in different model spaces."""


class ArgumentError(HeatcompError, ValueError):
    """A precondition on an argument is violated."""


class DegenerateDomainError(HeatcompError, ValueError):
    """Domain has empty interior or otherwise cannot support the operation."""


class QuadratureError(HeatcompError, RuntimeError):
    """Numerical integration did not reach the requested tolerance.

    `achieved` carries the best error estimate that was reached.
    """

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved


class NotSmoothError(HeatcompError, ValueError):
    """Boundary point is a corner; curvature is undefined there."""


class LimitUndefinedError(HeatcompError, RuntimeError):
    """An extrapolated limit did not converge."""


class SearchFailureError(HeatcompError, RuntimeError):
    """No optimization seed converged; diagnostics in `details`."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class RefinementRequiredError(HeatcompError, ValueError):
    """Requested resolution is too coarse for the stated accuracy."""


class EpsilonTooLargeError(HeatcompError, ValueError):
    """No curve/circle intersection exists in the search bracket."""


class FrameUndefinedError(HeatcompError, ValueError):
    """Frenet frame is undefined where the curvature vanishes."""


class ConfigError(HeatcompError, ValueError):
    """Invalid run configuration or unreadable input file."""

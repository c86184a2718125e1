"""Exception types shared across the package."""


class DualwaveError(Exception):
    """Base class for all package errors."""


class DomainError(DualwaveError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SingularityError(DualwaveError, ValueError):
    """Evaluation was requested at (or too close to) a field singularity."""


class ConvergenceError(DualwaveError, RuntimeError):
    """An iterative solver failed to converge.

    Carries the last bracket examined so callers can diagnose the failure.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class ResolutionError(DualwaveError, ValueError):
    """A grid is too coarse to resolve the requested quantity."""


class InsufficientDataError(DualwaveError, ValueError):
    """A trajectory or signal is too short for the requested analysis."""


class NodeStagnationError(DualwaveError, ArithmeticError):
    """The guiding velocity is undefined: the local density is below threshold."""


class NoPeakError(DualwaveError, ValueError):
    """A spectrum has no usable peak (flat signal)."""


class ConfigError(DualwaveError, ValueError):
    """A scenario configuration is invalid."""

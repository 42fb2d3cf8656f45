"""Exception types raised by flexfgm."""


class CopulaError(ValueError):
    """Base class for all library errors."""


class DomainError(CopulaError):
    """An argument lies outside the unit interval / unit square."""


class InvalidParametersError(CopulaError):
    """Parameters do not define a valid copula for the requested operation."""


class DegenerateSampleError(CopulaError):
    """A sample is too small or has a constant coordinate."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance."""

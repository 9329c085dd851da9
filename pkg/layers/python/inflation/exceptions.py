"""Exception hierarchy shared by the numeric modules and the service layer."""
from __future__ import annotations


class InflationSpectraError(Exception):
    """Base class for every error raised by the package."""


class InvalidParameterError(InflationSpectraError, ValueError):
    """A parameter is outside the domain of the requested operation."""


class IllegalWordError(InvalidParameterError):
    """A word contains a factor that the generating rule never produces."""


class PathologicalSampleError(InflationSpectraError):
    """An orbit point falls on the zero set of the Fourier matrix."""

    def __init__(self, message: str, k: float | None = None, step: int | None = None):
        super().__init__(message)
        self.k = k
        self.step = step


class NonConvergenceError(InflationSpectraError):
    """A quadrature, refinement or search did not reach its tolerance."""


class ConfigurationError(InflationSpectraError):
    """An environment parameter could not be read or cast."""

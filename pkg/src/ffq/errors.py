"""Exception types and small validation helpers shared across the package."""

import math
import numbers

INF = math.inf


class FFQError(Exception):
    """Base class for every error raised by this library."""


class DomainError(FFQError):
    """An argument lies outside the operation's domain."""


class BranchError(DomainError):
    """A principal-branch power or logarithm was requested on its cut."""


class DegenerateMeasure(FFQError):
    """The measure increment vanished; the difference quotient is undefined."""


class IntrinsicError(FFQError):
    """An operation requiring real series coefficients received complex ones."""


class FrameError(FFQError):
    """A slice frame is not an orthonormal pair of imaginary units."""


class DegreeMismatch(FFQError):
    """A series exceeds the degree a precomputed table supports."""


class NoConvergence(FFQError):
    """Refinement hit its cap above tolerance.

    Carries the last estimate and the last inter-level change so callers can
    inspect how the refinement was behaving (a roughly constant change per
    doubling is the signature of a logarithmically divergent integral).
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


def check_order(k):
    """Validate a truncation order: a non-negative integer, or inf."""
    if k == INF:
        return INF
    if isinstance(k, numbers.Integral) and not isinstance(k, bool) and k >= 0:
        return int(k)
    raise DomainError(f"truncation order must be a non-negative integer or inf, got {k!r}")

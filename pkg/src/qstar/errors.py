"""Exception types shared across the package."""


class QStarError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(QStarError):
    """Matrix or vector dimensions are inconsistent."""


class SingularMatrix(QStarError):
    """A linear solve hit a pivot below the singularity threshold."""


class NotPowerOfTwo(QStarError):
    """Requested order is not a power of two."""


class ThresholdEnergy(QStarError):
    """Energy coincides with a channel threshold where the formula degenerates."""


class ClosedInputChannel(QStarError):
    """Incoming flux was requested on an energetically closed line."""


class DegenerateParameters(QStarError):
    """Design parameters make an analytic predictor formula degenerate."""


class BadShape(QStarError):
    """Device construction received inconsistent or non-admissible parameters."""


class NoHalfCrossing(QStarError):
    """A transmission curve never crosses one half around the requested peak."""


class GridTooCoarse(QStarError):
    """Sampling grid is too coarse for the requested kernel width."""


class ResonantLength(QStarError):
    """An internal web line hit a resonance of the finite-size graph."""

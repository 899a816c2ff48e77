"""Exception hierarchy.

Leaf names match the error conditions documented on each operation; the
intermediate categories are what the CLI maps onto distinct exit codes.
"""


class TechEvoError(Exception):
    """Base class for every error this package raises deliberately."""


class InputError(TechEvoError):
    """Bad input data: CSV parsing or series validation."""


class AlignmentError(TechEvoError):
    """Two series cannot be paired on common timestamps."""


class FittingError(TechEvoError):
    """S-curve fitting or curve evaluation failed."""


class EstimationError(TechEvoError):
    """The log-log regression cannot be carried out."""


class ConfigError(TechEvoError):
    """Invalid analysis configuration."""


class MalformedRow(InputError):
    """A CSV line is not two comma-separated decimal numbers."""


class NonPositiveValue(InputError):
    """A series value is zero or negative (logs are taken downstream)."""


class DuplicateTimestamp(InputError):
    """Two points in one series share the same time coordinate."""


class TooFewPoints(InputError):
    """Fewer points than the operation needs (minimum 3)."""


class InsufficientOverlap(AlignmentError):
    """Host and subsystem series share fewer than 3 timestamps."""


class LevelOutOfRange(FittingError):
    """Requested level lies outside the open interval (0, K)."""


class KTooSmall(FittingError):
    """A saturation candidate does not exceed every observed value."""


class NotSShaped(FittingError):
    """Best linearized fit has a non-positive growth rate."""


class ValueAtSaturation(FittingError):
    """A value meets or exceeds its saturation level K."""


class EmptyEarlyPhase(FittingError):
    """No rows survive the early-phase cap filter."""


class DegenerateX(EstimationError):
    """Regressor has zero variance; the slope is unidentified."""


class LengthMismatch(EstimationError):
    """Paired sequences have different lengths."""


class InvalidAlpha(ConfigError):
    """Significance level must lie strictly between 0 and 1."""

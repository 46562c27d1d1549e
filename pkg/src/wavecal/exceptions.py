"""Exception and warning types shared across the package."""


class WavecalError(Exception):
    """Base class for all errors raised by this package."""


class ModelSpecError(WavecalError):
    """Invalid composition of latent process blocks."""


class ParameterDomainError(WavecalError):
    """Parameter value outside its admissible domain."""


class ScaleError(WavecalError):
    """Invalid wavelet scale (odd, too small, or not shorter than the signal)."""


class TransformError(WavecalError):
    """Non-finite input to a parameter-space transform."""


class InputDataError(WavecalError):
    """Unreadable, non-numeric, or non-finite input data."""


class CoverageError(WavecalError):
    """Too few batches/coefficients to estimate a covariance."""


class NonConvergenceError(WavecalError):
    """No optimizer start converged.

    The best incumbent (a FitResult with ``converged=False``) is attached as
    ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class BootstrapReliabilityError(WavecalError):
    """Too many bootstrap replicates failed to converge."""


class RankError(WavecalError):
    """Rank-deficient curvature matrix; ``directions`` names the deficient ones."""

    def __init__(self, message, directions=()):
        super().__init__(message)
        self.directions = tuple(directions)


class StudyError(WavecalError):
    """A Monte Carlo study exceeded its failure budget."""


class UsageError(WavecalError):
    """Invalid command-line or configuration usage."""


class WeightingFallbackWarning(UserWarning):
    """A requested weighting matrix was unavailable and a fallback was used."""


class UnderIdentifiedWarning(UserWarning):
    """Fewer scales than parameters; the fit may not be unique."""


class TopScaleWarning(UserWarning):
    """The largest scale has very few coefficients; its variance is high."""


class NearSingularCovarianceWarning(UserWarning):
    """The estimated wavelet-variance covariance is close to singular."""


class ParameterWarning(UserWarning):
    """A parameter sits on a degenerate (but representable) point."""

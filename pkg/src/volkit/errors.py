"""Exception hierarchy shared by every module.

All errors raised by the library derive from :class:`VolkitError`, so callers
can catch one base class.  The CLI maps subfamilies to exit codes: usage and
configuration problems, data problems, and numerical failures.
"""


class VolkitError(Exception):
    """Base class for all library errors."""


class ConfigurationError(VolkitError):
    """Bad configuration: unknown role, malformed config file, bad option."""


class ParameterError(VolkitError, ValueError):
    """An argument is outside its documented range (df <= 0, lag < 1, ...)."""


class DimensionError(VolkitError, ValueError):
    """Array shapes are inconsistent or a matrix fails a shape precondition."""


class DomainError(VolkitError, ValueError):
    """A value lies outside the mathematical domain of an operation.

    Carries an optional ``date`` naming the offending observation.
    """

    def __init__(self, message, date=None):
        super().__init__(message)
        self.date = date


class DivergenceError(DomainError):
    """A series or sum does not converge for the given inputs."""


class SingularityError(DomainError):
    """A denominator is (numerically) zero; carries the denominator value."""

    def __init__(self, message, denominator=None):
        super().__init__(message)
        self.denominator = denominator


class InsufficientDataError(VolkitError):
    """Not enough observations for the requested statistic or model."""


class DegenerateInputError(VolkitError):
    """Input is degenerate for the operation (constant series, zero variance)."""


class SingularDesignError(VolkitError):
    """Regression design is rank deficient.

    ``column`` is the 0-based index of the first column that is linearly
    dependent on the preceding ones.
    """

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


class NumericalError(VolkitError):
    """An iterative numerical routine failed (non-convergence, breakdown)."""


class IngestionError(VolkitError):
    """A data file cannot be parsed; carries the 1-based line number."""

    def __init__(self, message, line=None, path=None):
        super().__init__(message)
        self.line = line
        self.path = path


class DuplicateDateError(IngestionError):
    """The same calendar date appears twice in one series."""

    def __init__(self, message, date=None, line=None, path=None):
        super().__init__(message, line=line, path=path)
        self.date = date


class EmptyInputError(IngestionError):
    """A data file contains a header but no observations."""


class AlignmentError(VolkitError):
    """Series cannot be aligned onto a common calendar."""


class StaleDataError(AlignmentError):
    """Forward-fill would carry an observation across too wide a gap."""

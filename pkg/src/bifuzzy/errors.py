"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line can map failures
without a lookup table: 1 for parse/validation problems, 2 for
dimension/scale problems, 3 for internal inconsistencies.
"""


class BifuzzyError(Exception):
    exit_code = 3


class ValidationError(BifuzzyError, ValueError):
    exit_code = 1


class ParseError(ValidationError):
    pass


class MissingEntry(ValidationError):
    pass


class DuplicateEntry(ValidationError):
    pass


class BoundaryViolation(ValidationError):
    pass


class DisjointnessViolation(ValidationError):
    pass


class MonotonicityViolation(ValidationError):
    """A covering pair ``lower -> upper`` whose values decrease."""

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class RaggedRow(ValidationError):
    pass


class DuplicateId(ValidationError):
    pass


class DomainError(BifuzzyError, ValueError):
    exit_code = 2


class DimensionMismatch(DomainError):
    pass


class LengthMismatch(DimensionMismatch):
    pass


class ScaleViolation(DomainError):
    pass


class ScaleMismatch(ScaleViolation):
    pass


class PositiveComponent(DomainError):
    pass


class EmptyInput(DomainError):
    pass


class UnsupportedAxiomForScale(DomainError):
    pass


class LinkViolation(BifuzzyError):
    """The neutral/right/left variants disagree; always an implementation bug."""

    exit_code = 3

"""Exception hierarchy.

Every error carries the invariant it enforces in its message so the CLI can
report it verbatim.
"""


class DNumberError(ValueError):
    """Base class for all library errors."""


class ValidationError(DNumberError):
    """Input violates a constructor invariant."""


class SizeCapError(DNumberError):
    """A frame is too large for the requested operation."""


class EmptyFrame(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class FrameTooLarge(SizeCapError):
    pass


class UnknownLabel(ValidationError):
    pass


class InvalidSubset(ValidationError):
    pass


class MassOutOfRange(ValidationError):
    pass


class EmptySetMass(ValidationError):
    pass


class SumNotOne(ValidationError):
    pass


class SumExceedsOne(ValidationError):
    pass


class NotComplete(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class ValueOutOfRange(ValidationError):
    pass


class PairNotDisjoint(ValidationError):
    pass


class ConflictingSymmetricEntries(ValidationError):
    pass


class FrameTooLargeForDense(SizeCapError):
    pass


class FrameTooLargeForOracle(SizeCapError):
    pass


class ParseError(DNumberError):
    """An instance file or subset expression is malformed."""

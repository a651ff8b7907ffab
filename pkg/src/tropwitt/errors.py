"""Exception types shared across the package."""


class TropwittError(Exception):
    """Base class for all library errors."""


class DegreeOverflowError(TropwittError):
    """An operation would need terms beyond the configured degree bound."""


class NotSymmetricError(TropwittError):
    """A polynomial claimed to be symmetric is not."""


class ConstantTermError(TropwittError):
    """The inner argument of a composition has a nonzero constant term."""


class FormatError(TropwittError):
    """A JSON document does not match the expected schema."""

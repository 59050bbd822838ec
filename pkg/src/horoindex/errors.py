"""Exception hierarchy."""


class HoroindexError(Exception):
    """Base class for library errors."""


class DomainError(HoroindexError, ValueError):
    """Bad input: dimension mismatch, empty hull, non-dominant weight, ..."""


class ValidationError(HoroindexError):
    """A theorem-backed integrality or consistency check failed.

    This signals a bug or corrupted data, never a legitimate answer.
    """


class RouteDisagreementError(ValidationError):
    """Two independent index computations produced different values."""

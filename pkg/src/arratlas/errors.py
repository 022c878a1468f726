"""Exception hierarchy shared by every arratlas module."""

from __future__ import annotations


class ArratlasError(Exception):
    """Base class for all library errors."""


# exactmath
class DuplicateAbscissa(ArratlasError, ValueError):
    pass


class NonIntegerCoefficient(ArratlasError, ArithmeticError):
    """Interpolated data does not come from an integer polynomial."""


class NonInvertibleSeries(ArratlasError, ZeroDivisionError):
    pass


# arrangement
class AlreadyBoxed(ArratlasError, ValueError):
    pass


class EvenModulus(ArratlasError, ValueError):
    pass


class VerificationModulusMismatch(ArratlasError):
    """The interpolated polynomial disagrees with an extra point count."""


class CapExceeded(ArratlasError, ValueError):
    """A computation was refused because it exceeds a configured size cap."""


class SearchSpaceTooLarge(CapExceeded):
    pass


# formulas
class DomainTooSmall(ArratlasError, ValueError):
    pass


class NonIntegerEGFCoefficient(NonIntegerCoefficient):
    pass


class InvalidEvaluationPoint(ArratlasError, ValueError):
    pass


# orders / graphs
class NotCanonical(ArratlasError, ValueError):
    pass


class PointOnHyperplane(ArratlasError, ValueError):
    pass


class NotThreshold(ArratlasError, ValueError):
    pass

"""Exception hierarchy.

User-facing input problems derive from :class:`InvalidWord`; everything else
signals an internal inconsistency (a layout or bookkeeping bug) and derives
from :class:`ConsistencyError`.
"""


class LorenzError(Exception):
    pass


class InvalidWord(LorenzError, ValueError):
    pass


class EmptyWord(InvalidWord):
    pass


class InvalidLetter(InvalidWord):
    pass


class SingleLetterWord(InvalidWord):
    pass


class PeriodicWord(InvalidWord):
    pass


class BoundTooLarge(LorenzError, ValueError):
    pass


class UnknownFormat(LorenzError, ValueError):
    pass


class ConsistencyError(LorenzError, AssertionError):
    pass


class IntegralityViolation(ConsistencyError):
    pass


class NegativeGenus(ConsistencyError):
    pass


class ConstructionFailure(ConsistencyError):
    pass


class MultipleComponents(ConsistencyError):
    pass


class NotLorenz(ConsistencyError):
    """Grid has no long-strand structure, so no Lorenz word can be read off."""


class ShortShortCrossing(ConsistencyError):
    pass


class NonIntegerGrading(ConsistencyError):
    pass


class ProcedureMismatch(ConsistencyError):
    pass


class InexactDivision(ConsistencyError):
    pass


class MultiComponent(ConsistencyError):
    pass

"""Exception hierarchy.

Everything raised on bad input or a broken invariant derives from
``TnSpecError`` so callers (and the CLI) can catch one type.  Most errors
are also ``ValueError`` subclasses because they signal rejected values.
"""

from __future__ import annotations


class TnSpecError(Exception):
    """Base class for all library errors."""


class PartitionError(TnSpecError, ValueError):
    """Invalid partition data."""


class NotNonincreasingError(PartitionError):
    """Parts are not sorted in nonincreasing order (no silent sorting)."""


class NonPositivePartError(PartitionError):
    """A part is zero or negative."""


class SumMismatchError(PartitionError):
    """Components of a decomposition do not add up to the stated n."""


class HeadTooSmallError(PartitionError):
    """A leading part is smaller than the first part of the tail."""


class ParityViolationError(TnSpecError, ArithmeticError):
    """An expression that must be exactly divisible left a remainder."""


class FormulaOverflowError(TnSpecError, OverflowError):
    """n exceeds the configured safe bound for eigenvalue formulas."""


class FamilyError(TnSpecError, ValueError):
    """Invalid request to a witness-family constructor."""


class OutOfFamilyRangeError(FamilyError):
    """(n, target) is outside the declared range of the family."""


class NotInSetError(FamilyError):
    """Target is not one of the discrete values the family covers."""


class DispatchGapError(FamilyError):
    """No family matched a target inside the range the dispatch tiles."""


class WitnessVerificationError(TnSpecError):
    """A constructed witness failed its own eigenvalue re-check."""


class SegmentError(TnSpecError, ValueError):
    """Invalid request to a segment-coverage driver."""


class BelowConstructiveRangeError(SegmentError):
    """n is below the range where the constructive argument applies."""


class TargetOutOfSegmentError(SegmentError):
    """Requested eigenvalue lies outside the covered segment."""


class NoHeadFitsError(SegmentError):
    """No admissible leading part brackets the requested eigenvalue."""


class WitnessNotFoundError(TnSpecError):
    """Exhaustive search found no partition with the requested eigenvalue."""


class OracleLimitError(TnSpecError, ValueError):
    """n exceeds the configured limit for exhaustive enumeration."""


class SizeLimitError(TnSpecError, ValueError):
    """n exceeds the hard limit for dense Cayley-graph computation."""


class IntegerRoundingError(TnSpecError, ArithmeticError):
    """A numeric eigenvalue was not within tolerance of an integer."""

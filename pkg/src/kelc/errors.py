"""Exception types shared across the package."""


class KelcError(Exception):
    """Base class for all kelc errors."""


class InvalidLength(KelcError):
    """Sequence literal does not decode to exactly 2^n bits."""


class InvalidLiteral(KelcError):
    """Sequence literal contains characters outside the accepted grammar."""


class CannotFold(KelcError):
    """Folding a period-1 sequence is undefined."""


class UndefinedForZero(KelcError):
    """Operation is undefined for the all-zero sequence."""


class OutOfRange(KelcError):
    """Numeric argument outside its documented domain."""


class InvalidBranch(KelcError):
    """Multiplier evaluated outside its parameter bounds."""


class FormulaError(KelcError):
    """A division that must be exact left a remainder (transcription bug)."""


class MultipleMatch(KelcError):
    """More than one dispatch branch matched; the branches must be disjoint."""


class TooLarge(KelcError):
    """Requested enumeration exceeds the supported size cap."""

"""Exception types shared across the package."""


class SturmianError(Exception):
    """Base class for all package-specific errors."""


class StreamTooShort(SturmianError):
    """A continued-fraction coefficient stream ended before enough terms were read."""


class UndecidedAtBudget(SturmianError):
    """A certified comparison could not be resolved within the precision budget."""


class MixedField(SturmianError):
    """Arithmetic attempted between quadratic numbers with incompatible radicands."""


class RadiusTooSmall(SturmianError):
    """The requested window is too short to close a single block at the given level."""


class MalformedPartition(SturmianError):
    """Block run lengths violate the admissible-run constraints."""


class TokenizationFailure(SturmianError):
    """An R/L word contained an L not preceded by an R and cannot be tokenized."""


class EmptyOpSeq(SturmianError):
    """An operation sequence was empty where at least one operation is required."""


class NotAdmissible(SturmianError):
    """The given word is not a factor of the sequence."""


class TooShort(SturmianError):
    """The word is too short for the requested decomposition."""


class SplitFailure(SturmianError):
    """A palindromic prefix admits no symmetric split."""


class DegenerateExponent(SturmianError):
    """The density-ratio exponent is undefined because the ratio is identically 1."""


class EqualLetters(SturmianError):
    """An exchange was requested at a site whose two letters are equal."""


class OutOfRange(SturmianError):
    """An index fell outside the window it was meant to address."""


class WrapsCircle(SturmianError):
    """An interval that was expected to avoid the wrap point 0 ~ 1 wraps around it."""

"""Exception types shared across the package."""


class PermdelError(ValueError):
    """Base class for every error raised by this package."""


class WrongLengthError(PermdelError):
    """Sequence does not have the expected length."""


class DuplicateSymbolError(PermdelError):
    """A symbol occurs more than once in a would-be permutation."""


class SymbolOutOfRangeError(PermdelError):
    """A symbol lies outside {0, ..., n-1}."""


class LengthMismatchError(PermdelError):
    """Two operands have incompatible lengths."""


class ParamOutOfRangeError(PermdelError):
    """A structural parameter (index, shift, length) is out of range."""


class DuplicateInsertError(PermdelError):
    """Value is already present in a set that requires distinct members."""


class IndexOutOfRangeError(PermdelError):
    """Positional index is outside the valid range of a sequence."""


class InvalidRepVectorError(PermdelError):
    """Vector violates the digit bounds of a representation vector."""


class MessageOutOfRangeError(PermdelError):
    """Message integer does not fit the code's data domain."""


class DigitOutOfRangeError(PermdelError):
    """A data digit violates its mixed-radix bound."""


class InvalidSymbolsError(PermdelError):
    """Received word contains duplicate or out-of-range symbols."""


class NotACodewordError(PermdelError):
    """Full-length input is not a member of the requested codebook."""


class BoundExceededError(PermdelError):
    """Requested exhaustive computation exceeds the configured bound."""

"""Exception hierarchy shared by every module of the package."""


class FpfError(Exception):
    """Base class for all errors raised by :mod:`fpfposet`."""


class InvalidInvolutionError(FpfError, ValueError):
    """A word that is not a fixed-point-free involution."""


class MalformedBracketError(FpfError, ValueError):
    pass


class ParseError(FpfError, ValueError):
    pass


class InvariantError(FpfError, AssertionError):
    """An internal invariant failed; the input was corrupted somewhere upstream."""


class SizeMismatchError(FpfError, ValueError):
    pass


class NotComparableError(FpfError, ValueError):
    pass


class UnsuitableRiseError(FpfError, ValueError):
    pass


class NonCoverStepError(FpfError, ValueError):
    pass


class UnlabeledEdgeError(FpfError, ValueError):
    pass


class DegenerateError(FpfError, ValueError):
    """The proper part of the poset is empty (n = 1)."""


class ResourceLimitError(FpfError):
    """A configured cap was exceeded. Never raised for a falsified property."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.what = what
        self.cap = cap


class EnumerationLimitError(ResourceLimitError):
    pass


class ChainLimitError(ResourceLimitError):
    pass


class RidgeMemoryError(ResourceLimitError):
    pass


class VerificationError(FpfError):
    """A property asserted by the theory was falsified by computation."""


class ShellingError(VerificationError):
    pass


class SubposetViolationError(VerificationError):
    pass

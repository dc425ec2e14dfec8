"""Exception hierarchy shared by every module of the package."""


class IntervalSpaceError(Exception):
    """Base class for all errors raised by :mod:`intervalspace`."""


class NotSummable(IntervalSpaceError):
    pass


class AmbiguousSum(IntervalSpaceError):
    """Two orderings of a tuple produced different partial sums."""


class InvalidRaw(IntervalSpaceError):
    pass


class InvalidSequence(IntervalSpaceError):
    pass


class WindowMismatch(IntervalSpaceError):
    pass


class OutOfWindow(IntervalSpaceError):
    pass


class NotSeparated(IntervalSpaceError):
    pass


class OutOfDomain(IntervalSpaceError):
    pass


class LengthMismatch(IntervalSpaceError):
    pass


class CollapseConflict(IntervalSpaceError):
    """A monotone collapse produced a zero-length interval with equal end parities
    or glued intervals that may not touch."""


class ValidationFailed(IntervalSpaceError):
    """An explicit homotopy left the space it is supposed to stay in."""


class InfeasibleSpec(IntervalSpaceError):
    pass


class SizeBound(IntervalSpaceError):
    pass


class UnsupportedKind(IntervalSpaceError):
    pass


class ParseError(IntervalSpaceError, ValueError):
    pass

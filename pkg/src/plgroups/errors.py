"""Exception hierarchy.

Every error carries a ``token`` (its class name) which the CLI prints to
stderr so callers can match on it.
"""

from __future__ import annotations


class PLGroupError(Exception):
    """Base class for all domain errors raised by the library."""

    @property
    def token(self) -> str:
        return type(self).__name__


class NotAProductOfBases(PLGroupError, ValueError):
    pass


class DomainError(PLGroupError, ValueError):
    pass


class SideUndefined(PLGroupError, ValueError):
    pass


class InvalidMap(PLGroupError, ValueError):
    """Breakpoint data does not describe an orientation preserving PL map."""


class ParseError(PLGroupError, ValueError):
    pass


# thompson
class IndexOutOfRange(PLGroupError, IndexError):
    pass


class InvalidSubdivision(PLGroupError, ValueError):
    pass


class NotInFn(PLGroupError, ValueError):
    pass


class NotInRing(PLGroupError, ValueError):
    pass


class OutOfRange(PLGroupError, ValueError):
    pass


class SignatureMismatch(PLGroupError, ValueError):
    pass


class BadPartial(PLGroupError, ValueError):
    pass


class NotACone(PLGroupError, ValueError):
    pass


class NotAnNaryInterval(PLGroupError, ValueError):
    pass


# gammaq
class BreakpointNotInRing(PLGroupError, ValueError):
    pass


class SlopeNotFactorable(PLGroupError, ValueError):
    pass


class CrossingCountMismatch(PLGroupError, ValueError):
    pass


class NotInFEta(PLGroupError, ValueError):
    pass


class NotAStabilizer(PLGroupError, ValueError):
    pass


class DepthTooSmall(PLGroupError, ValueError):
    pass


class NotInWindow(PLGroupError, ValueError):
    pass


class TooWide(PLGroupError, ValueError):
    pass


class NotStablySupported(PLGroupError, ValueError):
    pass


class TrivialInput(PLGroupError, ValueError):
    pass


class UnsupportedBase(PLGroupError, ValueError):
    pass


class DuplicatePoint(PLGroupError, ValueError):
    pass


class ConstructionFailed(PLGroupError, RuntimeError):
    """A constructive search did not verify; never returned as a wrong answer."""


# cli
class UnknownSuite(PLGroupError, ValueError):
    pass

"""
Exception hierarchy shared by every package module.

User-data problems derive from ``InputError`` (a ``ValueError``); broken
internal invariants derive from ``InternalError`` (an ``AssertionError``).
The CLI maps the two families to exit codes 1 and 2.
"""


class KnotToolError(Exception):
    """Base class for all errors raised by this package."""


class InputError(KnotToolError, ValueError):
    """Input data is malformed, inconsistent or outside a hypothesis."""


class InternalError(KnotToolError, AssertionError):
    """An internal invariant was broken; indicates a bug, not bad input."""


# --- diagram ---------------------------------------------------------------

class MalformedSyntax(InputError):
    pass


class ArcUsedTwiceError(InputError):
    """An arc label does not occur in exactly two crossing slots."""


class OrientationInconsistent(InputError):
    pass


class AmbiguousOrientation(OrientationInconsistent):
    """Successor numbering does not pin down the direction of a component."""


class NonSphericalEmbedding(InputError):
    pass


class DisconnectedInput(InputError):
    pass


class InvalidDiagram(InputError):
    pass


class NotAlternating(InputError):
    pass


# --- seifert / invariants --------------------------------------------------

class DisconnectedGraph(InputError):
    pass


class HypothesisViolated(InputError):
    """A required hypothesis does not hold; ``hypothesis`` names it."""

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class NotSymmetric(InputError):
    pass


# --- braid -----------------------------------------------------------------

class IndexOutOfRange(InputError):
    pass


class BandIndexInvalid(InputError):
    pass


# --- quasipositivity -------------------------------------------------------

class BraidDataError(InputError):
    """Braid index / writhe data contradicts the diagram."""


class ParityError(BraidDataError):
    pass


class NegativeR(BraidDataError):
    pass


class InconsistentBraidData(BraidDataError):
    """Braid data disagrees with what the diagram itself determines."""


# --- corpus / tables -------------------------------------------------------

class InvalidTerms(InputError):
    pass


class FileUnreadable(InputError):
    pass


class HeaderMismatch(InputError):
    pass


# --- internal --------------------------------------------------------------

class SelfLoopDetected(InternalError):
    pass


class NonTermination(InternalError):
    pass


class BraidReadError(InternalError):
    """A braided diagram could not be read off as a braid word."""

"""Domain errors raised by fareykit operations.

Every error names the violated precondition rather than the call site, so
the CLI can surface them verbatim.
"""


class FareykitError(ValueError):
    """Base class for all domain errors."""


class BothZero(FareykitError):
    """(0, 0) does not represent a point of the projective line."""


class OutOfRange(FareykitError):
    """Argument outside the operation's domain."""


class NotIrrational(FareykitError):
    """Surd discriminant is a perfect square (the value is rational)."""


class OddLength(FareykitError):
    """Regular continued fraction word must have even length."""


class EntryBelowTwo(FareykitError):
    """Negative continued fraction word must have all entries >= 2."""


class NotASolution(FareykitError):
    """Word does not evaluate to plus or minus the identity."""


class Not3d(FareykitError):
    """Dissection has a cell whose size is not a multiple of 3."""


class NotTotallyPositive(FareykitError):
    """Word is not the quiddity of any triangulation."""


class NotAPolygon(FareykitError):
    """Vertex sequence is not a decreasing Farey-adjacent chain."""


class NonIntegerIndex(FareykitError):
    """Neighbour-sum quotient is not an exact integer."""


class NotPositive(FareykitError):
    """Walk is not positively oriented."""


class WrongSign(FareykitError):
    """Word classification is incompatible with the requested labeling mode."""


class BadIndices(FareykitError):
    """Index quadruple violates the identity's ordering constraints."""


class NotHyperbolic(FareykitError):
    """Matrix trace has absolute value below 3."""


class IsIdentity(FareykitError):
    """Plus or minus identity has no nonempty minimal presentation."""


class WrongShape(FareykitError):
    """Matrix does not have the sign layout required by the construction."""

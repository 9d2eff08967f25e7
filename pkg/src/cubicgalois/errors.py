"""Exception hierarchy.

Everything raised on bad mathematical input derives from ``DomainError`` so the
CLI can map it to exit code 1. ``ParseError`` is kept separate (exit code 2).
"""


class DomainError(ValueError):
    pass


class NegativeInput(DomainError):
    pass


class NotASquare(DomainError):
    pass


class DivisionByZeroPoly(DomainError, ZeroDivisionError):
    pass


class DegenerateAffine(DomainError):
    pass


class WrongDegree(DomainError):
    pass


class RepeatedRoots(DomainError):
    pass


class NotGalois(DomainError):
    """Raised by ``certify``; ``reason`` is one of the REASON_* constants."""

    REDUCIBLE = "Reducible"
    NON_SQUARE_DISCRIMINANT = "NonSquareDiscriminant"
    REPEATED_ROOTS = "RepeatedRoots"
    DEGENERATE_ALPHA = "DegenerateAlpha"

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or f"not a cubic Galois polynomial: {reason}")


class InexactDivision(DomainError):
    pass


class NonSquareOutput(RuntimeError):
    """A coupled cubic came out with a non-square discriminant.

    This can only happen through a bug, so it is not a DomainError.
    """


class InconsistentPair(DomainError):
    pass


class NoRepresentative(DomainError):
    pass


class NonPositiveK(DomainError):
    pass


class NegativeN(DomainError):
    pass


class UndefinedAtPole(DomainError):
    pass


class NotThreeRealRoots(DomainError):
    pass


class PoleOfFamily(DomainError):
    pass


class ParseError(ValueError):
    def __init__(self, text, pos, expected):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")

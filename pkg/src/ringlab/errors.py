"""Exception hierarchy shared by all ringlab modules."""

from __future__ import annotations


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class NotARing(RingLabError):
    """A table fails one of the commutative-unital-ring axioms."""


class BadModulus(RingLabError):
    """Modulus out of range (n < 2) or characteristic not prime."""


class NonMonic(RingLabError):
    """Quotient modulus polynomial is not monic of degree >= 1."""


class NotAnIdeal(RingLabError):
    """Generator list does not denote an ideal of the inner ring."""


class NotMaximal(RingLabError):
    """Localization target is not a maximal ideal."""


class NotPrime(RingLabError):
    """Operation requires a prime ideal."""


class ForeignElement(RingLabError):
    """Element passed to a ring it does not belong to."""


class RingMismatch(RingLabError):
    """Ideals from different rings combined."""


class OrderTooLarge(RingLabError):
    """Ring order exceeds the bound configured for this operation."""


class CharMismatch(RingLabError):
    """Polynomials over different prime fields combined."""


class ArityMismatch(RingLabError):
    """Polynomials with different variable lists combined."""


class ParseError(RingLabError):
    """Text input rejected; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)

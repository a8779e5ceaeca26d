"""Exception types shared across the package.

Every rejection of bad input derives from SignOrderError so callers (and
the command line front end) can catch a single type.  Failed checks are
reported through return values, never through exceptions.
"""

from __future__ import annotations


class SignOrderError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyInput(SignOrderError):
    """A pattern or order string contained no letters."""


class IllegalCharacter(SignOrderError):
    """A pattern or order contained a symbol outside its alphabet."""


class LeadingMinus(SignOrderError):
    """A sign pattern began with '-'; patterns are normalized to lead with '+'."""


class DegreeZero(SignOrderError):
    """The operation needs at least one root, i.e. a pattern of length >= 2."""


class InvalidRootSet(SignOrderError):
    """A root was zero, or two roots shared the same absolute value."""


class ZeroCoefficient(SignOrderError):
    """An exact expansion produced a vanishing coefficient.

    Sign patterns are defined only for polynomials with all coefficients
    nonzero, so the offending input is non-generic; searches treat this as
    a prompt to perturb or resample, never as a verdict.
    """

    def __init__(self, exponent: int):
        super().__init__(f"coefficient of x^{exponent} is zero")
        self.exponent = exponent


class RatioCapExceeded(SignOrderError):
    """Doubling the spread ratio passed the cap without reproducing the pattern."""


class IncompatibleCounts(SignOrderError):
    """Sign-change/preservation counts of the pattern do not match the order."""


class BadNormalization(SignOrderError):
    """A lift source must begin (+, +): monic with a positive subleading term."""


class DegreeTooLarge(SignOrderError):
    """Exhaustive enumeration was requested above the configured ceiling."""

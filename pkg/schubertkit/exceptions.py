"""Errors raised by schubertkit."""
from __future__ import annotations


class SchubertKitError(Exception):
    """Base error for the library."""


class InvalidOption(SchubertKitError):
    """An option value failed validation."""


class InvalidElement(SchubertKitError):
    """A window is not a signed permutation of the requested kind."""


class IllegalGenerator(SchubertKitError):
    """A generator index is not legal for the group kind."""


class KindMismatch(SchubertKitError):
    """Two operands live in different groups or ranks."""


class BoundExceeded(SchubertKitError):
    """An enumeration grew past its caller-supplied bound."""


class InvalidFlag(SchubertKitError):
    """A flag sequence is not strictly increasing or uses an illegal entry."""


class IncompatibleFlags(SchubertKitError):
    """An element is not compatible with the given flag sequences."""


class NotGrassmannian(SchubertKitError):
    """An element has descents outside the allowed set."""


class NotStrict(SchubertKitError):
    """A partition has repeated parts."""


class NotKStrict(SchubertKitError):
    """A partition repeats a part larger than k."""


class NotTypedKStrict(SchubertKitError):
    """A typed partition has an inconsistent type tag."""


class LengthMismatch(SchubertKitError):
    """Index vectors of different lengths were combined."""


class NonDivisible(SchubertKitError):
    """A divided difference numerator was not divisible by its root."""


class WrongRing(SchubertKitError):
    """An operation needs a Gamma element but got a plain polynomial."""


class DegreeOverflow(SchubertKitError):
    """A degree or alphabet bound of the shared ring was exceeded."""


class NotSymmetric(SchubertKitError):
    """A basis expansion left a nonzero remainder."""


class NonIntegralCoefficient(SchubertKitError):
    """A coefficient claimed to be integral is not."""


class NegativeCoefficient(SchubertKitError):
    """A coefficient claimed to be nonnegative is negative."""


class NotIncreasing(SchubertKitError):
    """An element is not increasing up to the requested position."""


class HypothesisViolated(SchubertKitError):
    """An identity was requested outside its hypotheses."""


class NonTriangular(SchubertKitError):
    """A candidate basis is dependent or does not span the target."""


class NonTerminating(SchubertKitError):
    """A raising operator expansion has no vanishing threshold."""

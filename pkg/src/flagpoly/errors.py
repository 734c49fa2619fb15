"""Exception types shared across the package."""

from __future__ import annotations


class FlagPolyError(ValueError):
    """Base class for all errors raised by flagpoly."""


class NotDivisible(FlagPolyError):
    """Exact polynomial division left a nonzero remainder."""


class NonIntegral(FlagPolyError):
    """Interpolation produced a non-integer coefficient."""


class Overdetermined(FlagPolyError):
    """Surplus interpolation points do not lie on the fitted polynomial."""


class DimensionMismatch(FlagPolyError):
    pass


class InvalidInput(FlagPolyError):
    pass


class NotNilpotent(FlagPolyError):
    pass


class ConstantTermViolation(FlagPolyError):
    pass


class ResourceLimit(FlagPolyError):
    """An oracle enumeration would exceed its configured element budget."""

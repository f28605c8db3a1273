"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """A documented parameter precondition was violated."""


class OutOfProvenDomainError(ValueError):
    """Evaluation was requested outside the interval where the formula is proven.

    Volume formulas in this package are piecewise results with hard endpoints;
    extrapolating past them would silently produce unproven numbers, so we
    refuse instead.
    """

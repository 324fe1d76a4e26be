#!/usr/bin/env python3

"""
Errors
------
Exception types raised by the norm, average and verification code.

Everything is a ValueError (or RuntimeError) subclass so callers that only
catch the builtin types keep working.
"""


class ValidationError(ValueError):
    """Invalid input: bad shape, non-decreasing weights, normalization violation."""


class DimensionError(ValidationError):
    """Length or shape mismatch between a vector and a matrix or space."""


class DomainRangeError(ValueError):
    """Value lies above the reachable range of a finite-domain function."""


class EnumerationLimitError(ValueError):
    """Exhaustive enumeration requested above the configured limit."""


class ConvergenceError(RuntimeError):
    """Bisection could not bracket or converge."""

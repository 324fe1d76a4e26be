#!/usr/bin/env python3

"""
Base Orlicz Function
--------------------
Abstract base class for one-dimensional Orlicz functions.
"""

import math
from abc import ABC, abstractmethod

import numpy as np

from ..errors import DomainRangeError, ValidationError
from ..utils.bisection import bisect_increasing

INFINITE = math.inf
ABS_TOL = 1e-12
SLOPE_RTOL = 1e-9
BISECTION_MAX_ITER = 200


def check_nonnegative(t):
    """Return t as a float array, rejecting negative or NaN arguments."""
    arr = np.asarray(t, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise ValidationError(f"Orlicz functions are defined on [0, inf), got {t!r}")
    return arr


class OrliczFunction(ABC):
    """
    Abstract base class for Orlicz functions M: [0, inf) -> [0, inf].

    Concrete forms are immutable after construction. Evaluation may return
    INFINITE (math.inf) outside a finite domain; that is a value, not an error.
    """

    @abstractmethod
    def eval(self, t):
        """
        Evaluate the function.

        Args:
            t (float or numpy.ndarray): Nonnegative argument(s)

        Returns:
            float or numpy.ndarray: M(t), possibly INFINITE
        """

    @abstractmethod
    def inverse(self, v, sup_preimage=False):
        """
        Return t with M(t) = v.

        Args:
            v (float): Nonnegative value in the range of the function
            sup_preimage (bool): For v = 0 on a flat initial segment, return
                the right end of the flat segment instead of 0

        Returns:
            float: The preimage
        """

    @abstractmethod
    def conjugate(self):
        """Return the Legendre conjugate M*(s) = sup_t (s t - M(t))."""

    @abstractmethod
    def to_dict(self):
        """Return a JSON-ready description of the function."""

    @property
    def domain_end(self):
        """Right end of the finite domain (INFINITE when M is finite everywhere)."""
        return INFINITE

    @property
    def is_strict(self):
        """Whether M(t) > 0 for all t > 0."""
        return True

    def __call__(self, t):
        return self.eval(t)

    def is_normalized(self, tol=ABS_TOL):
        """Whether M(1) = 1 within tol."""
        return abs(float(self.eval(1.0)) - 1.0) <= tol

    def bisect_inverse(self, v, tol=ABS_TOL,
                       max_iter=BISECTION_MAX_ITER):
        """
        Generic inverse by bisection on the monotone function.

        Args:
            v (float): Target value, v >= 0
            tol (float): Absolute tolerance
            max_iter (int): Maximum number of halvings

        Returns:
            float: t with |M(t) - v| <= tol

        Raises:
            DomainRangeError: If v is above the reachable range
        """
        if v < 0:
            raise ValidationError(f"inverse needs a nonnegative value, got {v!r}")
        if v == 0:
            return 0.0

        hi = 1.0
        while float(self.eval(hi)) < v:
            if math.isfinite(self.domain_end) and hi >= self.domain_end:
                raise DomainRangeError(f"value {v!r} is above the range of {self!r}")
            hi *= 2.0
            if math.isfinite(self.domain_end):
                hi = min(hi, self.domain_end)
            if hi > 1e300:
                raise DomainRangeError(f"value {v!r} is not reached by {self!r}")
        return bisect_increasing(lambda t: float(self.eval(t)), v, 0.0, hi,
                                 tol=tol, max_iter=max_iter)

    def young_gap(self, s, t):
        """Return M(t) + M*(s) - s t, which is nonnegative by Young's inequality."""
        return float(self.eval(t)) + float(self.conjugate().eval(s)) - s * t

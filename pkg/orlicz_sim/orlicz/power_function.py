#!/usr/bin/env python3

"""
Power Orlicz Functions
----------------------
Closed-form Orlicz functions M(t) = c * t^p, p >= 1.
"""

import math

import numpy as np

from ..errors import ValidationError
from .base_function import OrliczFunction, check_nonnegative
from .piecewise_function import PiecewiseOrlicz


class PowerOrlicz(OrliczFunction):
    """
    Power function M(t) = coefficient * t^p.

    With coefficient 1/p the conjugate is t^{p*}/p*, 1/p + 1/p* = 1. For
    p = 1 the conjugate is the indicator of [0, coefficient].
    """

    def __init__(self, p, coefficient=1.0):
        """
        Initialize the power function.

        Args:
            p (float): Exponent, p >= 1
            coefficient (float): Positive multiplier
        """
        p = float(p)
        coefficient = float(coefficient)
        if not math.isfinite(p) or p < 1:
            raise ValidationError(f"exponent must be >= 1, got {p!r}")
        if not math.isfinite(coefficient) or coefficient <= 0:
            raise ValidationError(f"coefficient must be positive, got {coefficient!r}")
        self._p = p
        self._coefficient = coefficient

    @classmethod
    def normalized_dual_pair(cls, p):
        """The (1/p) t^p member of the classical dual pair."""
        return cls(p, 1.0 / p)

    @property
    def p(self):
        return self._p

    @property
    def coefficient(self):
        return self._coefficient

    @property
    def dual_exponent(self):
        """p* with 1/p + 1/p* = 1 (INFINITE for p = 1)."""
        return math.inf if self._p == 1 else self._p / (self._p - 1.0)

    def eval(self, t):
        arr = check_nonnegative(t)
        out = self._coefficient * np.power(arr, self._p)
        if np.ndim(t) == 0:
            return float(out)
        return out

    def inverse(self, v, sup_preimage=False):
        v = float(v)
        if math.isnan(v) or v < 0:
            raise ValidationError(f"inverse needs a nonnegative value, got {v!r}")
        if self._p == 2.0:
            return math.sqrt(v / self._coefficient)
        return (v / self._coefficient) ** (1.0 / self._p)

    def conjugate(self):
        """
        Closed-form conjugate.

        For c t^p with p > 1 the conjugate is (1/p*) (c p)^{1 - p*} s^{p*};
        for p = 1 it is the finite-domain indicator of [0, c].
        """
        if self._p == 1:
            return PiecewiseOrlicz([(0.0, 0.0), (self._coefficient, 0.0)], "inf")
        q = self.dual_exponent
        cp = self._coefficient * self._p
        coefficient = (1.0 / q) if cp == 1.0 else (1.0 / q) * cp ** (1.0 - q)
        return PowerOrlicz(q, coefficient)

    def to_dict(self):
        return {"kind": "power", "p": self._p, "coefficient": self._coefficient}

    def __repr__(self):
        return f"PowerOrlicz(p={self._p:.6g}, coefficient={self._coefficient:.6g})"

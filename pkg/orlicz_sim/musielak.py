#!/usr/bin/env python3

"""
Musielak-Orlicz Spaces
----------------------
Luxemburg norm, modular, ball membership and dual-norm estimates for a
vector of Orlicz functions, one per coordinate.
"""

import math
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from .errors import DimensionError, ValidationError
from .orlicz import ABS_TOL, INFINITE, OrliczFactory, OrliczFunction
from .utils.bisection import bisect_predicate, bracket_predicate

NORM_RTOL = 1e-10
MODULAR_TOL = 1e-12


class MusielakSpace:
    """
    The n-dimensional Musielak-Orlicz space with norm
    inf{rho > 0 : sum_i M_i(|x_i| / rho) <= 1}.
    """

    def __init__(self, functions: Sequence[OrliczFunction]):
        """
        Initialize the space.

        Args:
            functions: Ordered list of n >= 1 Orlicz functions
        """
        functions = list(functions)
        if not functions:
            raise ValidationError("a Musielak-Orlicz space needs at least one function")
        for f in functions:
            if not isinstance(f, OrliczFunction):
                raise ValidationError(f"expected an OrliczFunction, got {type(f).__name__}")
        self._functions = tuple(functions)
        self._normalized = all(f.is_normalized(ABS_TOL) for f in functions)
        self._conjugate = None

    @classmethod
    def orlicz(cls, function: OrliczFunction, n: int) -> "MusielakSpace":
        """The classical Orlicz space: the same function in every coordinate."""
        if n < 1:
            raise ValidationError(f"dimension must be positive, got {n}")
        return cls([function] * n)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MusielakSpace":
        if 'functions' not in data:
            raise ValidationError("space description needs 'functions'")
        space = cls([OrliczFactory.from_dict(f) for f in data['functions']])
        if 'normalized' in data and bool(data['normalized']) and not space.normalized:
            raise ValidationError("space is declared normalized but some M_i(1) != 1")
        return space

    def to_dict(self) -> Dict[str, Any]:
        return {"functions": [f.to_dict() for f in self._functions], "normalized": self._normalized}

    @property
    def functions(self) -> Tuple[OrliczFunction, ...]:
        return self._functions

    @property
    def dimension(self) -> int:
        return len(self._functions)

    @property
    def normalized(self) -> bool:
        """True when every M_i(1) = 1 within 1e-12."""
        return self._normalized

    def conjugate(self) -> "MusielakSpace":
        """The space of the conjugate functions M_i*."""
        if self._conjugate is None:
            self._conjugate = MusielakSpace([f.conjugate() for f in self._functions])
        return self._conjugate

    def check_vector(self, x) -> np.ndarray:
        arr = np.asarray(x, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] != self.dimension:
            raise DimensionError(f"expected a vector of length {self.dimension}, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("vector entries must be finite")
        return arr

    def _modular_abs(self, abs_x: np.ndarray, rho: float) -> float:
        total = 0.0
        for f, xi in zip(self._functions, abs_x):
            term = f.eval(xi / rho)
            if term == INFINITE:
                return INFINITE
            total += term
        return total

    def modular(self, x, rho: float = 1.0) -> float:
        """
        Sum of M_i(|x_i| / rho).

        Args:
            x: Real vector of length n
            rho (float): Positive scaling

        Returns:
            float: The modular, INFINITE if any term is infinite
        """
        arr = self.check_vector(x)
        if not rho > 0:
            raise ValidationError(f"rho must be positive, got {rho!r}")
        return self._modular_abs(np.abs(arr), float(rho))

    def luxemburg_norm(self, x, rtol: float = NORM_RTOL) -> float:
        """
        Luxemburg norm by bisection on the monotone predicate modular(rho) <= 1.

        Normalized spaces start from the bracket [max |x_i|, sum |x_i|];
        otherwise the bracket is found by doubling or halving from sum |x_i|.

        Args:
            x: Real vector of length n
            rtol (float): Relative tolerance on the norm

        Returns:
            float: The norm (0 for the zero vector)
        """
        abs_x = np.abs(self.check_vector(x))
        total = float(abs_x.sum())
        if total == 0.0:
            return 0.0

        def feasible(rho: float) -> bool:
            return self._modular_abs(abs_x, rho) <= 1.0 + MODULAR_TOL

        if self._normalized:
            lo, hi = float(abs_x.max()), total
            if not feasible(hi):
                lo, hi = bracket_predicate(feasible, hi)
        else:
            lo, hi = bracket_predicate(feasible, total)
        return bisect_predicate(feasible, lo, hi, rtol=rtol)

    def ball_membership(self, x, radius: float = 1.0) -> bool:
        """Whether x lies in radius * B_{Sigma M_i}, i.e. modular(x, radius) <= 1 + 1e-12."""
        if not radius > 0:
            raise ValidationError(f"radius must be positive, got {radius!r}")
        return self.modular(x, radius) <= 1.0 + MODULAR_TOL

    def dual_norm_estimate(self, x) -> Tuple[float, float]:
        """
        Interval containing the dual norm of x.

        The norm of the dual space (l_{Sigma M_i})* lies between L and 2L,
        where L is the Luxemburg norm of x in the conjugate space.

        Returns:
            tuple: (L, 2L)
        """
        lower = self.conjugate().luxemburg_norm(x)
        return lower, 2.0 * lower

    def pairing_bound(self, x, z) -> Tuple[float, float]:
        """
        Return (sum |x_i z_i|, 2 * ||x||_{Sigma M_i*} * ||z||_{Sigma M_i}).

        The first entry never exceeds the second (Young's inequality).
        """
        x_arr = self.check_vector(x)
        z_arr = self.check_vector(z)
        pairing = math.fsum(np.abs(x_arr * z_arr))
        bound = 2.0 * self.conjugate().luxemburg_norm(x_arr) * self.luxemburg_norm(z_arr)
        return pairing, bound

    def __repr__(self) -> str:
        return f"MusielakSpace(n={self.dimension}, normalized={self._normalized})"


def modular(space: MusielakSpace, x, rho: float = 1.0) -> float:
    return space.modular(x, rho)


def luxemburg_norm(space: MusielakSpace, x) -> float:
    return space.luxemburg_norm(x)


def ball_membership(space: MusielakSpace, x, radius: float = 1.0) -> bool:
    return space.ball_membership(x, radius)


def dual_norm_estimate(space: MusielakSpace, x) -> Tuple[float, float]:
    return space.dual_norm_estimate(x)

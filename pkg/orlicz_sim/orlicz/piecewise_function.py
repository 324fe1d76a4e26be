#!/usr/bin/env python3

"""
Piecewise-Linear Orlicz Functions
---------------------------------
Convex increasing piecewise-linear functions given by breakpoints, their
construction from decreasing weights, and exact Legendre conjugation.
"""

import math

import numpy as np

from ..errors import DomainRangeError, ValidationError
from .base_function import (ABS_TOL, INFINITE, SLOPE_RTOL, OrliczFunction,
                            check_nonnegative)


def _parse_tail(tail_slope):
    if isinstance(tail_slope, str):
        if tail_slope.lower() in ("inf", "infinite", "+inf"):
            return INFINITE
        raise ValidationError(f"Unknown tail slope marker: {tail_slope!r}")
    return float(tail_slope)


def _slopes_close(a, b):
    return abs(b - a) <= SLOPE_RTOL * max(1.0, abs(a), abs(b))


class PiecewiseOrlicz(OrliczFunction):
    """
    Convex, increasing, piecewise-linear Orlicz function.

    The function is linear between the breakpoints (t_k, v_k), k = 0..m,
    with (t_0, v_0) = (0, 0), and continues beyond t_m with tail_slope
    (INFINITE meaning the function is +inf beyond t_m). A flat first
    segment is admitted; is_strict is False for such functions.
    """

    def __init__(self, breakpoints, tail_slope):
        """
        Initialize the function.

        Args:
            breakpoints: Ordered (t, v) pairs starting with (0, 0)
            tail_slope (float or str): Slope beyond the last breakpoint, or "inf"

        Raises:
            ValidationError: If the breakpoints do not describe a convex
                increasing function vanishing at zero
        """
        pts = np.array(breakpoints, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 1:
            raise ValidationError("breakpoints must be a nonempty list of (t, v) pairs")
        if not np.all(np.isfinite(pts)):
            raise ValidationError("breakpoints must be finite")
        if pts[0, 0] != 0.0 or pts[0, 1] != 0.0:
            raise ValidationError(f"first breakpoint must be (0, 0), got {tuple(pts[0])}")

        t = pts[:, 0]
        v = pts[:, 1]
        if np.any(np.diff(t) <= 0):
            raise ValidationError("breakpoint abscissae must be strictly increasing")
        if np.any(np.diff(v) < 0) or np.any(np.diff(v[1:]) <= 0):
            raise ValidationError("breakpoint values must be strictly increasing after the first segment")

        slopes = np.diff(v) / np.diff(t)
        for k in range(len(slopes) - 1):
            if slopes[k + 1] < slopes[k] and not _slopes_close(slopes[k], slopes[k + 1]):
                raise ValidationError(f"segment slopes must be nondecreasing (segment {k + 1})")

        tail = _parse_tail(tail_slope)
        if math.isnan(tail) or tail <= 0:
            raise ValidationError(f"tail slope must be positive or INFINITE, got {tail_slope!r}")
        if len(slopes) and tail < slopes[-1] and not _slopes_close(slopes[-1], tail):
            raise ValidationError("tail slope must be at least the last segment slope")
        if len(slopes) == 0 and tail == INFINITE:
            raise ValidationError("a function that is infinite right after zero is not an Orlicz function")

        t.flags.writeable = False
        v.flags.writeable = False
        slopes.flags.writeable = False
        self._t = t
        self._v = v
        self._slopes = slopes
        self._tail_slope = tail

    @classmethod
    def from_weights(cls, weights, scale=1.0):
        """Alias of from_decreasing_weights."""
        return from_decreasing_weights(weights, scale)

    @property
    def breakpoints(self):
        """Breakpoints as an (m+1, 2) array."""
        return np.column_stack([self._t, self._v])

    @property
    def knots(self):
        """Breakpoint abscissae t_0..t_m."""
        return self._t

    @property
    def values(self):
        """Breakpoint values v_0..v_m."""
        return self._v

    @property
    def slopes(self):
        """Segment slopes, one per segment between consecutive breakpoints."""
        return self._slopes

    @property
    def tail_slope(self):
        return self._tail_slope

    @property
    def domain_end(self):
        return float(self._t[-1]) if self._tail_slope == INFINITE else INFINITE

    @property
    def is_strict(self):
        return len(self._slopes) == 0 or bool(self._slopes[0] > 0)

    def eval(self, t):
        """
        Evaluate by linear interpolation, with the tail beyond the last breakpoint.

        Args:
            t (float or numpy.ndarray): Nonnegative argument(s)

        Returns:
            float or numpy.ndarray: M(t); INFINITE beyond a finite domain
        """
        arr = check_nonnegative(t)
        inside = np.interp(arr, self._t, self._v)
        t_m = self._t[-1]
        beyond = arr > t_m
        if self._tail_slope == INFINITE:
            out = np.where(beyond, INFINITE, inside)
        else:
            with np.errstate(invalid="ignore"):
                out = np.where(beyond, self._v[-1] + self._tail_slope * (arr - t_m), inside)
        if np.ndim(t) == 0:
            return float(out)
        return out

    def inverse(self, v, sup_preimage=False):
        """
        Exact inverse of the piecewise-linear function.

        Args:
            v (float): Nonnegative value
            sup_preimage (bool): For v = 0 return the right end of a flat
                initial segment instead of 0

        Returns:
            float: t with M(t) = v

        Raises:
            DomainRangeError: If v exceeds the range of a finite-domain function
        """
        v = float(v)
        if math.isnan(v) or v < 0:
            raise ValidationError(f"inverse needs a nonnegative value, got {v!r}")
        flat = len(self._slopes) > 0 and self._slopes[0] == 0
        if v == 0:
            return float(self._t[1]) if (sup_preimage and flat) else 0.0

        v_m = self._v[-1]
        if v > v_m:
            if self._tail_slope == INFINITE:
                raise DomainRangeError(f"value {v!r} is above the range [0, {v_m!r}]")
            return float(self._t[-1] + (v - v_m) / self._tail_slope)

        start = 1 if flat else 0
        return float(np.interp(v, self._v[start:], self._t[start:]))

    def conjugate(self):
        """
        Exact Legendre conjugate.

        M* vanishes on [0, m_1], has a breakpoint at every distinct segment
        slope m_k with value m_k t_{k-1} - v_{k-1}, and ends at the tail slope
        with an INFINITE tail. An INFINITE tail turns into a finite tail slope
        t_m of the conjugate.

        Returns:
            PiecewiseOrlicz: The conjugate function
        """
        t, v = self._t, self._v
        s_points = [0.0]
        s_values = [0.0]
        for k, slope in enumerate(self._slopes):
            slope = float(slope)
            if slope <= s_points[-1] or _slopes_close(s_points[-1], slope) and len(s_points) > 1:
                continue
            s_points.append(slope)
            s_values.append(max(0.0, slope * float(t[k]) - float(v[k])))

        if self._tail_slope == INFINITE:
            tail = float(t[-1])
        else:
            sigma = self._tail_slope
            if sigma > s_points[-1] and not (len(s_points) > 1 and _slopes_close(s_points[-1], sigma)):
                s_points.append(sigma)
                s_values.append(max(0.0, sigma * float(t[-1]) - float(v[-1])))
            tail = INFINITE
        return PiecewiseOrlicz(list(zip(s_points, s_values)), tail)

    def canonical(self):
        """Return the same function without breakpoints whose two neighbouring slopes coincide."""
        keep = [0]
        m = len(self._slopes)
        for k in range(1, m + 1):
            left = self._slopes[k - 1]
            right = self._slopes[k] if k < m else self._tail_slope
            if right == INFINITE or not _slopes_close(left, right):
                keep.append(k)
        if len(keep) == m + 1:
            return self
        return PiecewiseOrlicz(self.breakpoints[keep], self._tail_slope)

    def equals(self, other, tol=ABS_TOL):
        """Compare canonical breakpoint lists and tails within an absolute tolerance."""
        a = self.canonical()
        b = other.canonical()
        if a.breakpoints.shape != b.breakpoints.shape:
            return False
        if not np.allclose(a.breakpoints, b.breakpoints, rtol=0.0, atol=tol):
            return False
        if a.tail_slope == INFINITE or b.tail_slope == INFINITE:
            return a.tail_slope == b.tail_slope
        return math.isclose(a.tail_slope, b.tail_slope, rel_tol=tol, abs_tol=tol)

    def to_dict(self):
        return {
            "breakpoints": self.breakpoints.tolist(),
            "tail_slope": "inf" if self._tail_slope == INFINITE else float(self._tail_slope),
        }

    def __repr__(self):
        tail = "inf" if self._tail_slope == INFINITE else f"{self._tail_slope:.6g}"
        return f"PiecewiseOrlicz(breakpoints={len(self._t)}, tail_slope={tail})"


def from_decreasing_weights(weights, scale=1.0):
    """
    Build the Orlicz function generated by a decreasing sequence.

    M(scale * (w_1 + ... + w_k)) = k/N for k = 1..N, linear in between,
    M(0) = 0, and the last segment slope is continued as the tail.

    Args:
        weights: w_1 >= w_2 >= ... >= w_N > 0
        scale (float): Positive scale applied to the prefix sums

    Returns:
        PiecewiseOrlicz: The generated function

    Raises:
        ValidationError: If the weights are not positive and nonincreasing
    """
    w = np.asarray(weights, dtype=np.float64).ravel()
    if w.size == 0:
        raise ValidationError("weights must be nonempty")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValidationError("weights must be positive and finite")
    if np.any(w[1:] > w[:-1] + ABS_TOL * np.maximum(1.0, w[:-1])):
        raise ValidationError("weights must be nonincreasing")
    if not scale > 0 or not math.isfinite(scale):
        raise ValidationError(f"scale must be positive, got {scale!r}")

    n = w.size
    t = scale * np.cumsum(w)
    v = np.arange(1, n + 1, dtype=np.float64) / n
    t_prev = t[-2] if n > 1 else 0.0
    v_prev = v[-2] if n > 1 else 0.0
    tail = (v[-1] - v_prev) / (t[-1] - t_prev)
    breakpoints = np.vstack([[0.0, 0.0], np.column_stack([t, v])])
    return PiecewiseOrlicz(breakpoints, tail)


def conjugate_pair(weights, scale=1.0):
    """Return (M, M*) for the function generated by weights."""
    m = from_decreasing_weights(weights, scale)
    return m, m.conjugate()

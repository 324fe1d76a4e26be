#!/usr/bin/env python3

"""
Bisection Utilities
-------------------
Bisection on monotone predicates and monotone functions.

The predicates used here may evaluate functions that jump to infinity, so
nothing relies on sign changes of a continuous function: only on the
predicate being False below some threshold and True above it.
"""

import math
from typing import Callable, Tuple

from ..errors import ConvergenceError


def bisect_predicate(predicate: Callable[[float], bool], lo: float, hi: float,
                     rtol: float = 1e-10, max_iter: int = 200) -> float:
    """
    Find the threshold of a monotone predicate.

    Args:
        predicate: False on [0, r*), True on [r*, inf) (or on (r*, inf))
        lo: lower bracket, predicate(lo) may be True or False
        hi: upper bracket, predicate(hi) must be True
        rtol: relative width of the final bracket
        max_iter: maximum number of halvings

    Returns:
        float: a point hi' with predicate(hi') True and hi' - r* <= rtol * hi'

    Raises:
        ConvergenceError: If predicate(hi) is False or the bracket does not shrink
    """
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if not predicate(hi):
        raise ConvergenceError(f"predicate is False at the upper bracket {hi!r}")
    if predicate(lo):
        return lo

    for _ in range(max_iter):
        if hi - lo <= rtol * hi:
            return hi
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # bracket is down to adjacent floats
            return hi
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    if hi - lo <= rtol * hi:
        return hi
    raise ConvergenceError(f"bisection did not converge in {max_iter} iterations")


def bracket_predicate(predicate: Callable[[float], bool], start: float,
                      max_steps: int = 1100) -> Tuple[float, float]:
    """
    Find (lo, hi) with predicate(lo) False and predicate(hi) True by doubling or halving.

    Args:
        predicate: monotone predicate as in bisect_predicate
        start: positive starting point
        max_steps: maximum number of doublings/halvings

    Returns:
        tuple: (lo, hi)

    Raises:
        ConvergenceError: If no bracket is found within max_steps
    """
    if not start > 0 or not math.isfinite(start):
        raise ValueError(f"start must be a positive finite number, got {start!r}")

    if predicate(start):
        hi = start
        for _ in range(max_steps):
            lo = 0.5 * hi
            if lo == 0.0:
                break
            if not predicate(lo):
                return lo, hi
            hi = lo
        raise ConvergenceError(f"predicate stays True below {hi!r}")

    lo = start
    for _ in range(max_steps):
        hi = 2.0 * lo
        if not math.isfinite(hi):
            break
        if predicate(hi):
            return lo, hi
        lo = hi
    raise ConvergenceError(f"predicate stays False above {lo!r}")


def bisect_increasing(fn: Callable[[float], float], target: float, lo: float, hi: float,
                      tol: float = 1e-12, max_iter: int = 200) -> float:
    """
    Solve fn(t) = target for a nondecreasing fn on [lo, hi].

    Args:
        fn: nondecreasing function
        target: value to reach, fn(lo) <= target <= fn(hi)
        lo: lower bracket
        hi: upper bracket
        tol: absolute tolerance on |fn(t) - target| and on the bracket width
        max_iter: maximum number of halvings

    Returns:
        float: t with |fn(t) - target| <= tol, or the midpoint of a bracket narrower than tol

    Raises:
        ConvergenceError: If target is outside [fn(lo), fn(hi)]
    """
    f_lo = fn(lo)
    f_hi = fn(hi)
    if abs(f_lo - target) <= tol:
        return lo
    if abs(f_hi - target) <= tol:
        return hi
    if not (f_lo < target < f_hi):
        raise ConvergenceError(f"target {target!r} not bracketed by [{f_lo!r}, {f_hi!r}]")

    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if abs(f_mid - target) <= tol or hi - lo <= tol:
            return mid
        if f_mid < target:
            lo = mid
        else:
            hi = mid
    return mid

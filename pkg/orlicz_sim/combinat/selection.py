#!/usr/bin/env python3

"""
Selection
---------
Partial sums of the decreasing rearrangement by linear-time selection.
"""

import math

import numpy as np

from ..errors import ValidationError


def top_k_sum(values, k: int) -> float:
    """
    Sum of the k largest absolute values.

    Uses np.partition (introselect, expected O(m)) instead of a full sort.
    The selected values are summed with math.fsum, so the result is the
    correctly rounded sum and does not depend on the selection order.

    Args:
        values: Flat array-like of m reals (higher-dimensional input is flattened)
        k (int): Number of largest entries, 1 <= k <= m

    Returns:
        float: s(1) + ... + s(k) for the decreasing rearrangement s of |values|

    Raises:
        ValidationError: If k is out of range
    """
    arr = np.abs(np.asarray(values, dtype=np.float64)).ravel()
    m = arr.size
    if not 1 <= k <= m:
        raise ValidationError(f"k must lie in [1, {m}], got {k}")
    if k == m:
        return math.fsum(arr)
    selected = np.partition(arr, m - k)[m - k:]
    return math.fsum(selected)


def decreasing_rearrangement(values) -> np.ndarray:
    """The |values| sorted in nonincreasing order (full sort, used as an oracle)."""
    arr = np.abs(np.asarray(values, dtype=np.float64)).ravel()
    return -np.sort(-arr)

#!/usr/bin/env python3

"""
Permutations and Compositions
-----------------------------
Minimal-change permutation generation and bounded integer compositions.
"""

import math
from functools import lru_cache
from typing import Iterator, Optional, Tuple

import numpy as np

from ..errors import ValidationError


def minimal_change_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Steinhaus-Johnson-Trotter order: consecutive permutations differ by one
    adjacent transposition.

    Args:
        n (int): Number of elements, n >= 0

    Yields:
        tuple: The n! permutations of range(n), starting from the identity
    """
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    perm = list(range(n))
    direction = [-1] * n  # indexed by value, -1 is left
    yield tuple(perm)

    while True:
        mobile, mobile_pos = -1, -1
        for idx, val in enumerate(perm):
            j = idx + direction[val]
            if 0 <= j < n and perm[j] < val and val > mobile:
                mobile, mobile_pos = val, idx
        if mobile < 0:
            return
        j = mobile_pos + direction[mobile]
        perm[mobile_pos], perm[j] = perm[j], perm[mobile_pos]
        for val in range(mobile + 1, n):
            direction[val] = -direction[val]
        yield tuple(perm)


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    """
    All permutations of range(n) in minimal-change order as a read-only
    (n!, n) integer array. Row r maps position i to perm[r, i].
    """
    table = np.array(list(minimal_change_permutations(n)), dtype=np.intp).reshape(math.factorial(n), n)
    table.setflags(write=False)
    return table


def count_compositions(parts: int, budget: int) -> int:
    """Number of (l_1, ..., l_parts) with l_i >= 0 and sum <= budget."""
    if parts < 0 or budget < 0:
        raise ValidationError("parts and budget must be nonnegative")
    return math.comb(budget + parts, parts)


def bounded_compositions(parts: int, budget: int,
                         max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate integer vectors with 0 <= l_i <= max_part and l_1 + ... + l_parts <= budget.

    Args:
        parts (int): Vector length
        budget (int): Upper bound on the sum
        max_part (int, optional): Upper bound on each entry (defaults to budget)

    Yields:
        tuple: Compositions in lexicographic order
    """
    if parts < 0 or budget < 0:
        raise ValidationError("parts and budget must be nonnegative")
    cap = budget if max_part is None else min(max_part, budget)

    def extend(prefix: Tuple[int, ...], remaining: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == parts:
            yield prefix
            return
        for l in range(min(cap, remaining) + 1):
            yield from extend(prefix + (l,), remaining - l)

    yield from extend((), budget)

#!/usr/bin/env python3

"""
Permutation Averages
--------------------
Ave_pi max_i |x_i y_{i,pi(i)}| by exact enumeration, by Monte Carlo, and
through the rearrangement sandwich

    (1/2n) * sum_{k<=n} s(k) <= average <= (1/n) * sum_{k<=n} s(k)

where s is the decreasing rearrangement of the n^2 products.
"""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from ..errors import DimensionError, EnumerationLimitError, ValidationError
from ..utils.random_streams import stream_rng
from .permutations import permutation_table
from .selection import top_k_sum
from .weight_matrix import WeightMatrix

ENUMERATION_LIMIT = 10
SUFFIX_SIZE = 7
MIN_TRIALS = 100
MC_BLOCK_SIZE = 4096
CONFIDENCE_LEVEL = 0.99


class AverageMethod(str, Enum):
    EXACT = "exact"
    MONTE_CARLO = "mc"
    BOUNDS = "bounds"

    @classmethod
    def parse(cls, value) -> "AverageMethod":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValidationError(f"Unknown average method: {value}")


@dataclass(frozen=True)
class AverageEstimate:
    """
    A permutation average with its uncertainty.

    half_width is 0 for EXACT, the sandwich radius for BOUNDS, and the
    99% normal-approximation half-width for MONTE_CARLO.
    """
    value: float
    method: AverageMethod
    half_width: float = 0.0
    trials: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if not self.value >= 0:
            raise ValidationError(f"average value must be nonnegative, got {self.value!r}")
        if not self.half_width >= 0:
            raise ValidationError(f"half_width must be nonnegative, got {self.half_width!r}")

    @property
    def interval(self) -> Tuple[float, float]:
        return self.value - self.half_width, self.value + self.half_width

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method.value,
            "half_width": self.half_width,
            "trials": self.trials,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AverageEstimate":
        return cls(
            value=float(data['value']),
            method=AverageMethod.parse(data['method']),
            half_width=float(data.get('half_width', 0.0)),
            trials=data.get('trials'),
            seed=data.get('seed'),
        )


def product_matrix(x, y) -> np.ndarray:
    """
    v_ij = |x_i * y_ij|.

    Args:
        x: Real vector of length n
        y: n x N matrix (array-like or WeightMatrix)

    Returns:
        np.ndarray: Nonnegative n x N matrix
    """
    y_arr = y.entries if isinstance(y, WeightMatrix) else np.asarray(y, dtype=np.float64)
    x_arr = np.asarray(x, dtype=np.float64)
    if y_arr.ndim != 2:
        raise DimensionError(f"y must be a 2-D matrix, got shape {y_arr.shape}")
    if x_arr.ndim != 1 or x_arr.shape[0] != y_arr.shape[0]:
        raise DimensionError(f"x has shape {x_arr.shape}, expected ({y_arr.shape[0]},)")
    if x_arr.shape[0] == 0:
        raise DimensionError("x and y must have at least one row")
    if not (np.all(np.isfinite(x_arr)) and np.all(np.isfinite(y_arr))):
        raise ValidationError("x and y must have finite entries")
    return np.abs(x_arr[:, None] * y_arr)


def _square_products(x, y) -> np.ndarray:
    v = product_matrix(x, y)
    if v.shape[0] != v.shape[1]:
        raise DimensionError(f"a square matrix is required, got shape {v.shape}")
    return v


def ks_bounds(x, y) -> Tuple[float, float]:
    """
    Rearrangement bounds on the permutation average.

    Returns:
        tuple: (lower, upper) = (S/(2n), S/n) with S the sum of the n largest |x_i y_ij|
    """
    v = _square_products(x, y)
    n = v.shape[0]
    lower = top_k_sum(v, n) / (2 * n)
    return lower, 2.0 * lower


def bounds_average(x, y) -> AverageEstimate:
    """The rearrangement sandwich as an estimate: midpoint with the radius as half_width."""
    lower, upper = ks_bounds(x, y)
    return AverageEstimate(value=0.5 * (lower + upper), method=AverageMethod.BOUNDS,
                           half_width=0.5 * (upper - lower))


def _block_maxima(v: np.ndarray, prefix: Sequence[int], table: np.ndarray) -> np.ndarray:
    """Per-permutation maxima over all completions of a fixed column prefix."""
    n = v.shape[0]
    d = len(prefix)
    head = max((v[i, c] for i, c in enumerate(prefix)), default=0.0)
    taken = set(prefix)
    remaining = np.array([c for c in range(n) if c not in taken], dtype=np.intp)
    sub = v[d:][:, remaining]
    block = sub[np.arange(n - d), table].max(axis=1)
    return np.maximum(block, head)


def exact_average(x, y, limit: int = ENUMERATION_LIMIT,
                  workers: Optional[int] = None) -> AverageEstimate:
    """
    Exact permutation average over all n! permutations.

    The first n - 7 rows are assigned through itertools.permutations; the
    last (at most 7) rows run through the cached minimal-change table,
    vectorized per prefix. All per-permutation maxima are summed with
    math.fsum, so the value does not depend on the enumeration order.

    Args:
        x: Real vector of length n
        y: n x n matrix
        limit (int): Largest n accepted
        workers (int, optional): Thread count for the prefix blocks

    Returns:
        AverageEstimate: method EXACT, half_width 0

    Raises:
        EnumerationLimitError: If n exceeds limit (use mc_average instead)
    """
    v = _square_products(x, y)
    n = v.shape[0]
    if n > limit:
        raise EnumerationLimitError(
            f"exact enumeration of {n}! permutations exceeds the limit n <= {limit}; use mc_average")

    s = min(n, SUFFIX_SIZE)
    table = permutation_table(s)
    prefixes = itertools.permutations(range(n), n - s)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            blocks = list(executor.map(lambda p: _block_maxima(v, p, table), prefixes))
    else:
        blocks = [_block_maxima(v, p, table) for p in prefixes]

    total = math.fsum(itertools.chain.from_iterable(b.tolist() for b in blocks))
    return AverageEstimate(value=total / math.factorial(n), method=AverageMethod.EXACT)


def _mc_block(v: np.ndarray, seed: int, block: int, size: int) -> np.ndarray:
    n = v.shape[0]
    rng = stream_rng(seed, block)
    perms = rng.permuted(np.tile(np.arange(n), (size, 1)), axis=1)
    return v[np.arange(n), perms].max(axis=1)


def mc_average(x, y, trials: int, seed: int, workers: Optional[int] = None,
               block_size: int = MC_BLOCK_SIZE) -> AverageEstimate:
    """
    Monte Carlo permutation average.

    Trials are split into fixed blocks; block b draws its permutations from
    stream_rng(seed, b), so each trial depends only on the seed
    and its index, and the result is identical for any number of workers.

    Args:
        x: Real vector of length n
        y: n x n matrix
        trials (int): Number of random permutations, at least 100
        seed (int): Seed, any integer
        workers (int, optional): Thread count for the blocks
        block_size (int): Trials per block

    Returns:
        AverageEstimate: method MONTE_CARLO with a 99% confidence half-width
    """
    if trials < MIN_TRIALS:
        raise ValidationError(f"trials must be at least {MIN_TRIALS}, got {trials}")
    v = _square_products(x, y)

    sizes: List[Tuple[int, int]] = []
    for block, start in enumerate(range(0, trials, block_size)):
        sizes.append((block, min(block_size, trials - start)))

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(lambda bs: _mc_block(v, seed, bs[0], bs[1]), sizes))
    else:
        chunks = [_mc_block(v, seed, b, size) for b, size in sizes]

    samples = np.concatenate(chunks)
    value = math.fsum(samples.tolist()) / trials
    z = stats.norm.ppf(0.5 + CONFIDENCE_LEVEL / 2)
    half_width = float(z * np.std(samples, ddof=1) / math.sqrt(trials))
    return AverageEstimate(value=value, method=AverageMethod.MONTE_CARLO,
                           half_width=half_width, trials=trials, seed=seed)


def estimate_average(x, y, method="exact", trials: int = 100_000, seed: int = 0,
                     limit: int = ENUMERATION_LIMIT, workers: Optional[int] = None) -> AverageEstimate:
    """Dispatch to exact_average, mc_average or bounds_average by method name."""
    method = AverageMethod.parse(method)
    if method is AverageMethod.EXACT:
        return exact_average(x, y, limit=limit, workers=workers)
    if method is AverageMethod.MONTE_CARLO:
        return mc_average(x, y, trials=trials, seed=seed, workers=workers)
    return bounds_average(x, y)

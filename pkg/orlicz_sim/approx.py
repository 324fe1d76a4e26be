#!/usr/bin/env python3

"""
Approximation Norm
------------------
For a matrix a with positive decreasing rows (n <= N),

    ||x||_a = max_{l_1 + ... + l_n <= N} sum_i |x_i| (a_i1 + ... + a_il_i)

is equivalent, up to the factor 2 on each side, to the Musielak-Orlicz norm
whose conjugate functions satisfy M_i*(a_i1 + ... + a_im) = m/N.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .analysis.reporting import VerificationReport
from .combinat.averages import product_matrix
from .combinat.permutations import bounded_compositions, count_compositions
from .combinat.selection import top_k_sum
from .combinat.weight_matrix import ROW_SUM_TOL, WeightMatrix, as_weight_matrix
from .errors import DimensionError, EnumerationLimitError
from .generation.generated_space import Side, Variant, functions_from_matrix
from .musielak import MusielakSpace
from .orlicz import ABS_TOL

BRUTEFORCE_LIMIT = 10**6


def _products(a, x) -> np.ndarray:
    matrix = as_weight_matrix(a)
    if not matrix.rows_decreasing:
        matrix = WeightMatrix(matrix.entries, rows_decreasing=True)
    if matrix.n > matrix.N:
        raise DimensionError(f"the a-norm needs n <= N, got shape {matrix.shape}")
    return product_matrix(x, matrix)


def a_norm(a, x) -> float:
    """
    ||x||_a as the sum of the N largest values |x_i| a_ij.

    Rows of |x_i| a_ij are nonincreasing, so the N largest values can be
    taken as a prefix of every row and the maximizing allocation is a
    top-N selection.

    Args:
        a: n x N matrix with positive nonincreasing rows, n <= N
        x: Real vector of length n

    Returns:
        float: The a-norm
    """
    v = _products(a, x)
    return top_k_sum(v, v.shape[1])


def a_norm_allocation(a, x) -> np.ndarray:
    """
    A maximizing allocation (l_1, ..., l_n).

    Values are ranked by decreasing size, ties by row and then column, so
    the selected set is a prefix of every row.

    Returns:
        np.ndarray: Integer vector with sum N
    """
    v = _products(a, x)
    n, N = v.shape
    rows, cols = np.indices((n, N))
    order = np.lexsort((cols.ravel(), rows.ravel(), -v.ravel()))
    chosen_rows = rows.ravel()[order[:N]]
    return np.bincount(chosen_rows, minlength=n)


def a_norm_bruteforce(a, x, limit: int = BRUTEFORCE_LIMIT) -> float:
    """
    ||x||_a by exhaustive search over all allocations.

    Raises:
        EnumerationLimitError: If there are more than limit allocations
    """
    v = _products(a, x)
    n, N = v.shape
    count = count_compositions(n, N)
    if count > limit:
        raise EnumerationLimitError(f"{count} allocations exceed the brute-force limit {limit}")
    best = 0.0
    for comp in bounded_compositions(n, N):
        total = math.fsum(itertools.chain.from_iterable(v[i, :l] for i, l in enumerate(comp)))
        best = max(best, total)
    return best


def approx_space(a, row_sum_tol: float = ROW_SUM_TOL) -> MusielakSpace:
    """
    The space Sigma M_i with M_i the conjugate of the function generated by row i.

    Args:
        a: n x N matrix with positive nonincreasing rows summing to 1

    Returns:
        MusielakSpace: The primal space
    """
    return functions_from_matrix(a, Variant.ROWSUM_NORMALIZED, Side.DUAL, row_sum_tol).primal_space()


@dataclass
class ApproxInstance:
    """A matrix a with rows summing to 1, a vector x, and the derived space."""
    a: WeightMatrix
    x: np.ndarray
    _space: Optional[MusielakSpace] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.a = as_weight_matrix(self.a).normalized_rows()
        self.x = np.asarray(self.x, dtype=np.float64)
        if self.a.n > self.a.N:
            raise DimensionError(f"n <= N is required, got shape {self.a.shape}")
        if self.x.shape != (self.a.n,):
            raise DimensionError(f"x has shape {self.x.shape}, expected ({self.a.n},)")

    @property
    def space(self) -> MusielakSpace:
        if self._space is None:
            self._space = approx_space(self.a)
        return self._space


def verify_lemma51(a, x, tol: float = ABS_TOL, bruteforce_limit: int = 10**4) -> VerificationReport:
    """
    Check (1/2) ||x||_a <= ||x||_{Sigma M_i} <= 2 ||x||_a.

    Args:
        a: n x N matrix with positive nonincreasing rows summing to 1
        x: Real vector of length n
        tol (float): Relative slack of the comparison
        bruteforce_limit (int): Cross-check against the brute force up to this many allocations

    Returns:
        VerificationReport: theorem "lemma5.1" with A = ||x||_a and L = ||x||_{Sigma M_i}
    """
    instance = ApproxInstance(a, x)
    A = a_norm(instance.a, instance.x)
    L = instance.space.luxemburg_norm(instance.x)
    c_low, c_high = 0.5, 2.0
    slack = tol * max(1.0, c_high * L)
    passed = c_low * L - slack <= A <= c_high * L + slack

    details = {
        "N": instance.a.N,
        "allocation": a_norm_allocation(instance.a, instance.x).tolist(),
    }
    if count_compositions(instance.a.n, instance.a.N) <= bruteforce_limit:
        brute = a_norm_bruteforce(instance.a, instance.x)
        details["bruteforce_match"] = brute == A
        passed = passed and brute == A
    return VerificationReport(theorem="lemma5.1", n=instance.a.n, A=A, L=L, c_low=c_low, c_high=c_high,
                              passed=passed, method="exact", seed=None, details=details)

"""
Combinat Package
----------------
Weight matrices, top-k selection, permutation generation and
permutation matrix-averages.
"""

from .weight_matrix import WeightMatrix, as_weight_matrix, ROW_SUM_TOL
from .selection import top_k_sum, decreasing_rearrangement
from .permutations import (minimal_change_permutations, permutation_table,
                           bounded_compositions, count_compositions)
from .averages import (AverageMethod, AverageEstimate, product_matrix, ks_bounds, bounds_average,
                       exact_average, mc_average, estimate_average, ENUMERATION_LIMIT, MIN_TRIALS)

__all__ = [
    'WeightMatrix',
    'as_weight_matrix',
    'ROW_SUM_TOL',
    'top_k_sum',
    'decreasing_rearrangement',
    'minimal_change_permutations',
    'permutation_table',
    'bounded_compositions',
    'count_compositions',
    'AverageMethod',
    'AverageEstimate',
    'product_matrix',
    'ks_bounds',
    'bounds_average',
    'exact_average',
    'mc_average',
    'estimate_average',
    'ENUMERATION_LIMIT',
    'MIN_TRIALS'
]

"""
Utils Package
-------------
Bisection, reproducible random streams and instance generation.
"""

from .bisection import bisect_predicate, bracket_predicate, bisect_increasing
from .random_streams import seed_entropy, stream_rng, instance_seed

__all__ = ['bisect_predicate', 'bracket_predicate', 'bisect_increasing', 'seed_entropy', 'stream_rng',
           'instance_seed']

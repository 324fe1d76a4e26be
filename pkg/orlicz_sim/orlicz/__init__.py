"""
Orlicz Package
--------------
One-dimensional Orlicz functions: piecewise-linear and power forms,
inversion and Legendre conjugation.
"""

from .base_function import OrliczFunction, INFINITE, ABS_TOL
from .piecewise_function import PiecewiseOrlicz, from_decreasing_weights, conjugate_pair
from .power_function import PowerOrlicz
from .factory import OrliczFactory

__all__ = [
    'OrliczFunction',
    'PiecewiseOrlicz',
    'PowerOrlicz',
    'OrliczFactory',
    'from_decreasing_weights',
    'conjugate_pair',
    'INFINITE',
    'ABS_TOL'
]

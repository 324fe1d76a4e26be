"""
Orlicz Simulation Package
-------------------------
Numerical toolkit for Musielak-Orlicz norms generated by combinatorial
matrix averages.

Features:
- Piecewise-linear and power Orlicz functions with exact conjugation
- Luxemburg norms, ball membership and dual-norm estimates
- Exact, Monte Carlo and rearrangement-bound permutation averages
- Matrix/function constructions and their sandwich verification
- Verification campaigns with JSON and CSV reports
"""

__version__ = "1.0.0"

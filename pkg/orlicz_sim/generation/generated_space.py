#!/usr/bin/env python3

"""
Generated Spaces
----------------
Musielak-Orlicz functions generated by a matrix with decreasing rows,
and the converse construction of a matrix from given functions.

Forward: M_i(scale * (y_i1 + ... + y_ik)) = k/n with scale 1 when the rows
sum to 1 and scale 1/n when the rows are only decreasing. With the DUAL
side the same equalities define M_i* instead of M_i.

Converse: y_ij = n * (M_i^{-1}(j/n) - M_i^{-1}((j-1)/n)).
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

import numpy as np

from ..combinat.weight_matrix import ROW_SUM_TOL, WeightMatrix, as_weight_matrix
from ..errors import ValidationError
from ..musielak import MusielakSpace
from ..orlicz import ABS_TOL, OrliczFunction, from_decreasing_weights


class Variant(str, Enum):
    ROWSUM_NORMALIZED = "rowsum"
    SCALED_BY_N = "scaled"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValidationError(f"Unknown variant: {value}")

    def scale(self, columns: int) -> float:
        return 1.0 if self is Variant.ROWSUM_NORMALIZED else 1.0 / columns

    def constants(self, n: int):
        """Sandwich constants (c_low, c_high) for the permutation average against ||x||_{Sigma M_i*}."""
        if self is Variant.ROWSUM_NORMALIZED:
            return 1.0 / (6 * n), 2.0 / n
        return 1.0 / 6, 2.0


class Side(str, Enum):
    PRIMAL = "primal"
    DUAL = "dual"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key == member.value:
                return member
        raise ValidationError(f"Unknown side: {value}")


@dataclass(frozen=True)
class GeneratedSpace:
    """
    A Musielak-Orlicz space together with the matrix that generated it.

    With side PRIMAL, space holds the M_i; with side DUAL it holds the M_i*
    (its conjugate() then gives the M_i).
    """
    space: MusielakSpace
    source: WeightMatrix
    variant: Variant
    side: Side

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def scale(self) -> float:
        return self.variant.scale(self.source.N)

    def primal_space(self) -> MusielakSpace:
        return self.space if self.side is Side.PRIMAL else self.space.conjugate()

    def dual_space(self) -> MusielakSpace:
        return self.space.conjugate() if self.side is Side.PRIMAL else self.space

    def generating_errors(self) -> np.ndarray:
        """
        |M(scale * prefix_k) - k/N| for every row and k, M being the
        function the matrix generates directly.
        """
        y = self.source.entries
        n, N = y.shape
        targets = np.arange(1, N + 1) / N
        errors = np.empty((n, N))
        for i, f in enumerate(self.space.functions):
            points = self.scale * np.cumsum(y[i])
            errors[i] = np.abs(np.asarray(f.eval(points), dtype=np.float64) - targets)
        return errors

    def check_generating_equalities(self, tol: float = ABS_TOL) -> bool:
        return bool(np.all(self.generating_errors() <= tol))


def functions_from_matrix(y, variant=Variant.ROWSUM_NORMALIZED, side=Side.PRIMAL,
                          row_sum_tol: float = ROW_SUM_TOL) -> GeneratedSpace:
    """
    Build the Musielak-Orlicz functions generated by a matrix.

    Args:
        y: n x N matrix with positive nonincreasing rows
        variant: ROWSUM_NORMALIZED (rows sum to 1, scale 1) or SCALED_BY_N (scale 1/N)
        side: PRIMAL (the equalities define M_i) or DUAL (they define M_i*)
        row_sum_tol (float): Row-sum tolerance under ROWSUM_NORMALIZED

    Returns:
        GeneratedSpace: The space and its source

    Raises:
        ValidationError: On a row-sum violation or a row that is not decreasing
    """
    variant = Variant.parse(variant)
    side = Side.parse(side)
    matrix = as_weight_matrix(y)
    if not matrix.rows_decreasing:
        matrix = WeightMatrix(matrix.entries, rows_decreasing=True)
    if variant is Variant.ROWSUM_NORMALIZED:
        matrix = matrix.normalized_rows(row_sum_tol)

    scale = variant.scale(matrix.N)
    functions = [from_decreasing_weights(row, scale) for row in matrix.entries]
    return GeneratedSpace(MusielakSpace(functions), matrix, variant, side)


def matrix_from_functions(functions: Sequence[OrliczFunction], columns: Optional[int] = None,
                          tol: float = ABS_TOL) -> WeightMatrix:
    """
    Build the matrix whose SCALED_BY_N construction reproduces the given functions
    at the points k/N.

    Args:
        functions: n normalized Orlicz functions (M_i(1) = 1)
        columns (int, optional): Row length N (defaults to n)
        tol (float): Tolerance for the normalization check and for rounding
            bumps between consecutive row entries

    Returns:
        WeightMatrix: n x N matrix with nonincreasing rows

    Raises:
        ValidationError: If some M_i(1) != 1, or if a row increases
            (M_i is not convex)
    """
    functions = list(functions)
    if not functions:
        raise ValidationError("at least one function is required")
    n = len(functions)
    N = n if columns is None else int(columns)
    if N < 1:
        raise ValidationError(f"columns must be positive, got {N}")

    levels = np.arange(N + 1) / N
    rows: List[np.ndarray] = []
    for i, f in enumerate(functions):
        if not f.is_normalized(tol):
            raise ValidationError(f"function {i} is not normalized: M(1) = {float(f.eval(1.0))!r}")
        inv = np.array([f.inverse(float(v)) for v in levels])
        inv[0] = 0.0
        row = N * np.diff(inv)
        rise = float(np.max(np.diff(row), initial=0.0))
        if rise > tol * max(1.0, float(row.max())):
            raise ValidationError(f"row {i} is not nonincreasing: M_{i} is not convex")
        # only rounding bumps are left here
        rows.append(np.minimum.accumulate(row))
    return WeightMatrix(np.vstack(rows))

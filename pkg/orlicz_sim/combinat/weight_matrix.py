#!/usr/bin/env python3

"""
Weight Matrix
-------------
Validated n x N matrices with positive, row-wise decreasing entries.
"""

import math
from typing import Any, Dict, List

import numpy as np

from ..errors import ValidationError

ROW_SUM_TOL = 1e-9


class WeightMatrix:
    """
    A real n x N matrix, optionally asserted to have rows
    y_i1 >= y_i2 >= ... >= y_iN > 0.
    """

    def __init__(self, entries, rows_decreasing: bool = True):
        """
        Initialize the matrix.

        Args:
            entries: 2-D array-like of finite reals
            rows_decreasing (bool): Validate that every row is positive and nonincreasing

        Raises:
            ValidationError: If the shape or the entries are invalid
        """
        arr = np.array(entries, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValidationError(f"weight matrix must be a non-empty 2-D array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("weight matrix entries must be finite")
        if rows_decreasing:
            if np.any(arr <= 0):
                raise ValidationError("weight matrix entries must be positive")
            bad_rows = np.nonzero(np.any(np.diff(arr, axis=1) > 0, axis=1))[0]
            if bad_rows.size:
                raise ValidationError(f"row {int(bad_rows[0])} is not nonincreasing")
        arr.setflags(write=False)
        self._entries = arr
        self._rows_decreasing = rows_decreasing

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeightMatrix":
        return cls(data['matrix'], bool(data.get('rows_decreasing', True)))

    def to_dict(self) -> Dict[str, Any]:
        return {"matrix": self._entries.tolist(), "rows_decreasing": self._rows_decreasing}

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def rows_decreasing(self) -> bool:
        return self._rows_decreasing

    @property
    def shape(self):
        return self._entries.shape

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def N(self) -> int:
        return self._entries.shape[1]

    @property
    def is_square(self) -> bool:
        return self.n == self.N

    def row(self, i: int) -> np.ndarray:
        return self._entries[i]

    def row_sums(self) -> np.ndarray:
        return np.array([math.fsum(r) for r in self._entries])

    def prefix_sums(self) -> np.ndarray:
        """
        Row prefix sums with a leading zero column.

        Returns:
            np.ndarray: n x (N+1) array P with P[i, k] = sum_{j<=k} y_ij and P[i, 0] = 0
        """
        n, N = self._entries.shape
        prefix = np.zeros((n, N + 1))
        prefix[:, 1:] = np.cumsum(self._entries, axis=1)
        return prefix

    def is_row_normalized(self, tol: float = ROW_SUM_TOL) -> bool:
        return bool(np.all(np.abs(self.row_sums() - 1.0) <= tol))

    def normalized_rows(self, tol: float = ROW_SUM_TOL) -> "WeightMatrix":
        """
        Rescale each row to sum exactly to 1.

        Args:
            tol (float): Allowed drift of the row sums before rescaling

        Raises:
            ValidationError: If some row sum differs from 1 by more than tol
        """
        sums = self.row_sums()
        bad = np.nonzero(np.abs(sums - 1.0) > tol)[0]
        if bad.size:
            i = int(bad[0])
            raise ValidationError(f"row {i} sums to {sums[i]!r}, expected 1 within {tol}")
        return WeightMatrix(self._entries / sums[:, None], self._rows_decreasing)

    def require_square(self) -> None:
        if not self.is_square:
            raise ValidationError(f"a square matrix is required, got shape {self.shape}")

    def tolist(self) -> List[List[float]]:
        return self._entries.tolist()

    def __repr__(self) -> str:
        return f"WeightMatrix(shape={self.shape}, rows_decreasing={self._rows_decreasing})"


def as_weight_matrix(y, rows_decreasing: bool = True) -> WeightMatrix:
    """Wrap an array-like as a WeightMatrix, passing WeightMatrix instances through."""
    if isinstance(y, WeightMatrix):
        return y
    return WeightMatrix(y, rows_decreasing)

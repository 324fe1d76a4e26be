#!/usr/bin/env python3

"""
Ball B
------
The polytope B = conv{(eps_i * (y_i1 + ... + y_il_i))_i : l_1 + ... + l_n <= n}
and the constructive certificate that B_{Sigma M_i} lies inside 3B.

A unit-ball point x is split as x = x_I + x_J where I collects the
coordinates with M_i(|x_i|) <= 1/n. Then |x_I| is dominated by the first
column of y (a point of B) and |x_J| by 2 z_J with z_J in B, so x lies in
B + 2B = 3B because B is solid.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..combinat.permutations import bounded_compositions, count_compositions
from ..errors import DimensionError, EnumerationLimitError, ValidationError
from ..musielak import MODULAR_TOL, MusielakSpace
from ..orlicz import ABS_TOL, INFINITE
from .generated_space import GeneratedSpace

VERTEX_LIMIT = 6
SIGN_FLIP_LIMIT = 16


def ball_B_vertices(y, include_signs: bool = False, budget: Optional[int] = None,
                    limit: int = VERTEX_LIMIT) -> List[np.ndarray]:
    """
    Enumerate the generating points of B.

    Args:
        y: n x N matrix
        include_signs (bool): Cross every prefix-sum vector with all sign patterns
        budget (int, optional): Bound on l_1 + ... + l_n (defaults to n)
        limit (int): Largest n accepted

    Returns:
        list: Distinct vectors in first-seen order (the zero vector first)

    Raises:
        EnumerationLimitError: If n exceeds limit
    """
    y_arr = y.entries if hasattr(y, 'entries') else np.asarray(y, dtype=np.float64)
    if y_arr.ndim != 2:
        raise DimensionError(f"y must be a 2-D matrix, got shape {y_arr.shape}")
    n, N = y_arr.shape
    if n > limit:
        raise EnumerationLimitError(f"vertex enumeration for n = {n} exceeds the limit n <= {limit}")
    budget = n if budget is None else int(budget)

    prefix = np.zeros((n, N + 1))
    prefix[:, 1:] = np.cumsum(y_arr, axis=1)
    rows = np.arange(n)
    sign_patterns = list(itertools.product((1.0, -1.0), repeat=n)) if include_signs else [None]

    seen: Dict[Tuple[float, ...], np.ndarray] = {}
    for comp in bounded_compositions(n, budget, N):
        base = prefix[rows, list(comp)]
        for eps in sign_patterns:
            # + 0.0 folds -0.0 into 0.0
            point = base if eps is None else base * np.asarray(eps) + 0.0
            key = tuple(point.tolist())
            if key not in seen:
                seen[key] = point
    return list(seen.values())


def vertex_count(n: int, budget: Optional[int] = None) -> int:
    """Number of compositions behind ball_B_vertices without signs."""
    return count_compositions(n, n if budget is None else budget)


@dataclass(frozen=True)
class Lemma31Witness:
    """
    Decomposition of a unit-ball point certifying membership in 3B.

    Vectors have length n and vanish outside their index set. levels holds
    M_i(|x_i|) and first_column the B-point dominating x_I.
    """
    J: Tuple[int, ...]
    I: Tuple[int, ...]
    k: Dict[int, int]
    x_I: np.ndarray
    x_J: np.ndarray
    z_J: np.ndarray
    w_J: np.ndarray
    levels: np.ndarray = field(repr=False)
    first_column: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.x_I.shape[0]

    def violations(self, tol: float = ABS_TOL) -> List[str]:
        """
        Check every witness invariant.

        Returns:
            list: Descriptions of violated invariants (empty if the witness is valid)
        """
        n = self.n
        problems: List[str] = []
        J, I = set(self.J), set(self.I)
        if J & I or (J | I) != set(range(n)):
            problems.append("I and J do not partition the index set")

        for i in range(n):
            in_J = self.levels[i] > 1.0 / n
            if in_J != (i in J):
                problems.append(f"index {i} has level {self.levels[i]!r} but is in {'J' if i in J else 'I'}")

        for i in self.J:
            k_i = self.k.get(i)
            if k_i is None or k_i < 1:
                problems.append(f"k_{i} missing or below 1")
                continue
            if not (k_i / n - tol <= self.levels[i] <= (k_i + 1) / n + tol):
                problems.append(f"level of index {i} is outside [k_i/n, (k_i+1)/n]")
        if sum(self.k.values()) > n:
            problems.append("sum of k_i exceeds n")

        for name, vec, support in (("x_I", self.x_I, I), ("x_J", self.x_J, J),
                                   ("z_J", self.z_J, J), ("w_J", self.w_J, J)):
            off = [i for i in range(n) if i not in support and vec[i] != 0.0]
            if off:
                problems.append(f"{name} is nonzero outside its index set at {off}")

        slack = tol * np.maximum(1.0, self.w_J)
        if np.any(np.abs(self.x_J) > self.w_J + slack):
            problems.append("|x_J| is not dominated by w_J")
        if np.any(self.w_J > 2.0 * self.z_J + slack):
            problems.append("w_J is not dominated by 2 z_J")
        I_mask = np.zeros(n, dtype=bool)
        I_mask[list(I)] = True
        if np.any(np.abs(self.x_I[I_mask]) > self.first_column[I_mask] * (1.0 + tol) + tol):
            problems.append("|x_I| is not dominated by the first column")
        return problems

    def is_valid(self, tol: float = ABS_TOL) -> bool:
        return not self.violations(tol)

    @property
    def x(self) -> np.ndarray:
        return self.x_I + self.x_J

    def to_dict(self) -> Dict:
        return {
            "J": list(self.J),
            "I": list(self.I),
            "k": {str(i): k for i, k in self.k.items()},
            "x_I": self.x_I.tolist(),
            "x_J": self.x_J.tolist(),
            "z_J": self.z_J.tolist(),
            "w_J": self.w_J.tolist(),
        }


def decompose_lemma31(g: GeneratedSpace, x, tol: float = ABS_TOL) -> Lemma31Witness:
    """
    Split a point of the unit ball of the generated space into its 3B certificate.

    The functions used are the ones the matrix generates directly, so the
    same construction serves both the PRIMAL space and the DUAL one.

    Args:
        g: Square generated space
        x: Vector with sum_i M_i(|x_i|) <= 1
        tol (float): Tolerance of the witness checks

    Returns:
        Lemma31Witness: A witness whose invariants all hold

    Raises:
        ValidationError: If x is outside the unit ball or the witness fails its checks
    """
    g.source.require_square()
    space = g.space
    n = g.n
    arr = space.check_vector(x)
    abs_x = np.abs(arr)
    levels = np.array([float(f.eval(xi)) for f, xi in zip(space.functions, abs_x)])
    if np.any(levels == INFINITE) or math.fsum(levels) > 1.0 + MODULAR_TOL:
        raise ValidationError("x is outside the unit ball of the generated space")
    # levels above 1 only come from the modular tolerance
    levels = np.minimum(levels, 1.0)

    prefix = g.scale * g.source.prefix_sums()
    first_column = prefix[:, 1].copy()

    J = tuple(i for i in range(n) if levels[i] > 1.0 / n)
    I = tuple(i for i in range(n) if i not in J)
    k: Dict[int, int] = {}
    x_I = np.zeros(n)
    x_J = np.zeros(n)
    z_J = np.zeros(n)
    w_J = np.zeros(n)
    for i in I:
        x_I[i] = arr[i]
    for i in J:
        k_i = min(max(int(math.floor(n * levels[i])), 1), n - 1)
        k[i] = k_i
        x_J[i] = arr[i]
        z_J[i] = prefix[i, k_i]
        w_J[i] = prefix[i, k_i + 1]

    witness = Lemma31Witness(J=J, I=I, k=k, x_I=x_I, x_J=x_J, z_J=z_J, w_J=w_J,
                             levels=levels, first_column=first_column)
    problems = witness.violations(tol)
    if problems:
        raise ValidationError("witness check failed: " + "; ".join(problems))
    return witness


def sign_flip_decomposition(v, u, tol: float = ABS_TOL,
                            limit: int = SIGN_FLIP_LIMIT) -> Tuple[np.ndarray, np.ndarray]:
    """
    Write u with |u| <= |v| as a convex combination of sign flips of v.

    Coordinate i takes sign +1 with probability (1 + u_i/v_i)/2 independently;
    the expectation of the flipped vector is u.

    Args:
        v: Reference vector
        u: Vector with |u_i| <= |v_i|
        tol (float): Slack in the domination check
        limit (int): Largest n accepted

    Returns:
        tuple: (signs, weights) with signs of shape (m, n) and positive weights summing to 1

    Raises:
        ValidationError: If |u| is not dominated by |v|
    """
    v = np.asarray(v, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    if v.shape != u.shape or v.ndim != 1:
        raise DimensionError(f"u and v must be vectors of equal length, got {u.shape} and {v.shape}")
    n = v.shape[0]
    if n > limit:
        raise EnumerationLimitError(f"sign-flip enumeration for n = {n} exceeds the limit n <= {limit}")
    if np.any(np.abs(u) > np.abs(v) + tol):
        raise ValidationError("|u| is not dominated by |v|")

    ratio = np.divide(u, v, out=np.zeros(n), where=v != 0)
    p_plus = (1.0 + np.clip(ratio, -1.0, 1.0)) / 2.0

    signs: List[Tuple[float, ...]] = []
    weights: List[float] = []
    for eps in itertools.product((1.0, -1.0), repeat=n):
        w = math.prod(p if e > 0 else 1.0 - p for e, p in zip(eps, p_plus))
        if w > 0:
            signs.append(eps)
            weights.append(w)
    return np.array(signs).reshape(len(signs), n), np.array(weights)


def sample_boundary_points(space: MusielakSpace, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    Random points x with ||x|| = 1, so sum_i M_i(|x_i|) is 1 up to the norm tolerance.

    Args:
        space: Musielak-Orlicz space
        count (int): Number of points
        rng: numpy Generator

    Returns:
        np.ndarray: count x n array
    """
    n = space.dimension
    points = np.empty((count, n))
    filled = 0
    while filled < count:
        u = rng.standard_normal(n) * rng.exponential(1.0, n)
        norm = space.luxemburg_norm(u)
        if norm == 0.0:
            continue
        points[filled] = u / norm
        filled += 1
    return points

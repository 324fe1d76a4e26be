#!/usr/bin/env python3

"""
Sandwich Verification
---------------------
Checks of the two-sided inequalities between permutation averages and
Musielak-Orlicz norms, of the matrix/function round trip, and of the
inclusions B in B_{Sigma M_i} in 3B.
"""

from typing import Optional, Sequence

import numpy as np

from ..analysis.reporting import VerificationReport
from ..combinat.averages import (ENUMERATION_LIMIT, AverageEstimate, AverageMethod, estimate_average,
                                 ks_bounds, product_matrix)
from ..combinat.selection import top_k_sum
from ..errors import ValidationError
from ..musielak import MODULAR_TOL, MusielakSpace
from ..orlicz import ABS_TOL, OrliczFunction
from .ball import VERTEX_LIMIT, ball_B_vertices, decompose_lemma31, sample_boundary_points, sign_flip_decomposition
from .generated_space import GeneratedSpace, Side, Variant, functions_from_matrix, matrix_from_functions

ROUND_TRIP_TOL = 1e-10
THEOREM_BY_VARIANT = {Variant.ROWSUM_NORMALIZED: "thm3.2", Variant.SCALED_BY_N: "thm3.3"}


def sandwich_passes(estimate: AverageEstimate, L: float, c_low: float, c_high: float,
                    tol: float = ABS_TOL) -> bool:
    """
    Decide c_low * L <= A <= c_high * L for an average estimate.

    EXACT compares the value directly. BOUNDS requires the rearrangement
    interval inside [c_low/2 * L, c_high * L]. MONTE_CARLO accepts when the
    confidence interval meets [c_low * L, c_high * L].
    """
    slack = tol * max(1.0, c_high * L)
    lo, hi = estimate.interval
    if estimate.method is AverageMethod.EXACT:
        return c_low * L - slack <= estimate.value <= c_high * L + slack
    if estimate.method is AverageMethod.BOUNDS:
        return lo >= 0.5 * c_low * L - slack and hi <= c_high * L + slack
    return hi >= c_low * L - slack and lo <= c_high * L + slack


def _estimate_details(estimate: AverageEstimate) -> dict:
    lo, hi = estimate.interval
    details = {"half_width": estimate.half_width, "interval": [lo, hi]}
    if estimate.trials is not None:
        details["trials"] = estimate.trials
    return details


def verify_rearrangement(x, y, method="exact", trials: int = 100_000, seed: int = 0,
                         limit: int = ENUMERATION_LIMIT, workers: Optional[int] = None) -> VerificationReport:
    """
    Check (1/2n) S <= Ave_pi max_i |x_i y_{i,pi(i)}| <= (1/n) S, S the sum of the n largest |x_i y_ij|.

    Args:
        x: Real vector of length n
        y: Real n x n matrix
        method: Average method name
        trials (int): Monte Carlo trials
        seed (int): Monte Carlo seed
        limit (int): Enumeration limit for the exact average
        workers (int, optional): Thread count

    Returns:
        VerificationReport: theorem "thm2.1" with L = S
    """
    v = product_matrix(x, y)
    n = v.shape[0]
    estimate = estimate_average(x, y, method, trials=trials, seed=seed, limit=limit, workers=workers)
    S = top_k_sum(v, n)
    c_low, c_high = 1.0 / (2 * n), 1.0 / n
    lower, upper = ks_bounds(x, y)
    details = _estimate_details(estimate)
    details["bounds"] = [lower, upper]
    return VerificationReport(
        theorem="thm2.1", n=n, A=estimate.value, L=S, c_low=c_low, c_high=c_high,
        passed=sandwich_passes(estimate, S, c_low, c_high),
        method=estimate.method.value, seed=estimate.seed, details=details)


def verify_sandwich(x, y, variant=Variant.ROWSUM_NORMALIZED, method="exact", trials: int = 100_000,
                    seed: int = 0, limit: int = ENUMERATION_LIMIT,
                    workers: Optional[int] = None) -> VerificationReport:
    """
    Check c_low ||x||_{Sigma M_i*} <= Ave_pi max_i |x_i y_{i,pi(i)}| <= c_high ||x||_{Sigma M_i*}.

    (c_low, c_high) is (1/(6n), 2/n) for ROWSUM_NORMALIZED and (1/6, 2) for SCALED_BY_N.

    Returns:
        VerificationReport: theorem "thm3.2" or "thm3.3"

    Raises:
        ValidationError: If y violates the variant's normalization
    """
    variant = Variant.parse(variant)
    g = functions_from_matrix(y, variant, Side.PRIMAL)
    g.source.require_square()
    L = g.dual_space().luxemburg_norm(x)
    estimate = estimate_average(x, g.source, method, trials=trials, seed=seed, limit=limit, workers=workers)
    c_low, c_high = variant.constants(g.n)
    details = _estimate_details(estimate)
    details["variant"] = variant.value
    return VerificationReport(
        theorem=THEOREM_BY_VARIANT[variant], n=g.n, A=estimate.value, L=L, c_low=c_low, c_high=c_high,
        passed=sandwich_passes(estimate, L, c_low, c_high),
        method=estimate.method.value, seed=estimate.seed, details=details)


def round_trip_error(functions: Sequence[OrliczFunction], g: GeneratedSpace) -> float:
    """max_{i,k} |M_i(scale * (y_i1 + ... + y_ik)) - k/N| for the given functions M_i."""
    y = g.source.entries
    N = y.shape[1]
    targets = np.arange(1, N + 1) / N
    worst = 0.0
    for f, row in zip(functions, y):
        values = np.asarray(f.eval(g.scale * np.cumsum(row)), dtype=np.float64)
        worst = max(worst, float(np.max(np.abs(values - targets))))
    return worst


def verify_converse(functions: Sequence[OrliczFunction], x, method="exact", trials: int = 100_000,
                    seed: int = 0, limit: int = ENUMERATION_LIMIT,
                    workers: Optional[int] = None) -> VerificationReport:
    """
    Converse construction end to end.

    Builds y_ij = n (M_i^{-1}(j/n) - M_i^{-1}((j-1)/n)), checks that its rows
    are nonincreasing and that the 1/n-scaled construction reproduces each
    M_i at the levels k/n, then checks the (1/6, 2) sandwich on y.

    Returns:
        VerificationReport: theorem "thm4.1"; details carry the round-trip error
        and the norm computed with the exact conjugates of the given functions
    """
    functions = list(functions)
    y = matrix_from_functions(functions)
    rows_ok = bool(np.all(np.diff(y.entries, axis=1) <= 0))
    g = functions_from_matrix(y, Variant.SCALED_BY_N, Side.PRIMAL)
    error = round_trip_error(functions, g)

    L = g.dual_space().luxemburg_norm(x)
    L_given = MusielakSpace(functions).conjugate().luxemburg_norm(x)
    estimate = estimate_average(x, y, method, trials=trials, seed=seed, limit=limit, workers=workers)
    c_low, c_high = Variant.SCALED_BY_N.constants(g.n)

    details = _estimate_details(estimate)
    details.update({
        "round_trip_error": error,
        "rows_nonincreasing": rows_ok,
        "L_given": L_given,
        "matrix": y.tolist(),
    })
    passed = rows_ok and error <= ROUND_TRIP_TOL and sandwich_passes(estimate, L, c_low, c_high)
    return VerificationReport(
        theorem="thm4.1", n=g.n, A=estimate.value, L=L, c_low=c_low, c_high=c_high,
        passed=passed, method=estimate.method.value, seed=estimate.seed, details=details)


def verify_lemma31(g: GeneratedSpace, samples: int = 1000, rng: Optional[np.random.Generator] = None,
                   vertex_limit: int = VERTEX_LIMIT, tol: float = ABS_TOL) -> VerificationReport:
    """
    Check B in B_{Sigma M_i} on every generating point of B, and B_{Sigma M_i} in 3B
    through witnesses for sampled boundary points.

    The space checked is g.space, so a DUAL generated space verifies the
    inclusions for the balls of the M_i*.

    Args:
        g: Square generated space
        samples (int): Number of sampled unit-sphere points
        rng: numpy Generator for the samples
        vertex_limit (int): Largest n for vertex enumeration
        tol (float): Tolerance of the witness checks

    Returns:
        VerificationReport: theorem "lemma3.1" with constants (1, 3) and no A or L
    """
    g.source.require_square()
    rng = rng if rng is not None else np.random.default_rng()
    space = g.space

    vertices = ball_B_vertices(g.scale * g.source.entries, include_signs=False, limit=vertex_limit)
    vertex_modulars = [space.modular(v) for v in vertices]
    vertex_failures = sum(1 for m in vertex_modulars if m > 1.0 + MODULAR_TOL)

    witness_failures = 0
    solidity_failures = 0
    max_J = 0
    for point in sample_boundary_points(space, samples, rng):
        try:
            witness = decompose_lemma31(g, point, tol)
        except ValidationError:
            witness_failures += 1
            continue
        max_J = max(max_J, len(witness.J))
        slack = tol * max(1.0, float(np.max(witness.w_J, initial=0.0)))
        signs, weights = sign_flip_decomposition(2.0 * witness.z_J, witness.x_J, tol=slack)
        rebuilt = weights @ (signs * (2.0 * witness.z_J))
        if not np.allclose(rebuilt, witness.x_J, rtol=1e-9, atol=1e-12):
            solidity_failures += 1

    details = {
        "side": g.side.value,
        "variant": g.variant.value,
        "vertices": len(vertices),
        "vertex_failures": vertex_failures,
        "max_vertex_modular": max(vertex_modulars),
        "witnesses": samples,
        "witness_failures": witness_failures,
        "solidity_failures": solidity_failures,
        "max_J": max_J,
    }
    passed = vertex_failures == 0 and witness_failures == 0 and solidity_failures == 0
    return VerificationReport(theorem="lemma3.1", n=g.n, A=None, L=None, c_low=1.0, c_high=3.0,
                              passed=passed, method="witness", seed=None, details=details)

#!/usr/bin/env python3

"""
Acceptance campaigns for the norm inequalities at full size.
"""

import math
import os
import sys
import time
import unittest

import numpy as np

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from orlicz_sim.approx import a_norm, a_norm_bruteforce, verify_lemma51
from orlicz_sim.combinat import decreasing_rearrangement, exact_average, ks_bounds, mc_average, top_k_sum
from orlicz_sim.generation import (Side, Variant, ball_B_vertices, decompose_lemma31, functions_from_matrix,
                                   matrix_from_functions, round_trip_error, sample_boundary_points,
                                   verify_converse, verify_sandwich)
from orlicz_sim.musielak import MODULAR_TOL
from orlicz_sim.orlicz import PowerOrlicz, from_decreasing_weights
from orlicz_sim.utils.instances import generate_campaign


def decreasing_matrix(rng, n, N=None, normalized=True):
    N = n if N is None else N
    entries = -np.sort(-rng.uniform(0.05, 1.0, size=(n, N)), axis=1)
    if normalized:
        entries = entries / entries.sum(axis=1, keepdims=True)
    return entries


class TestSandwichCampaigns(unittest.TestCase):
    """Permutation averages against their two-sided bounds."""

    def setUp(self):
        self.rng = np.random.default_rng(2024)

    def test_rearrangement_sandwich(self):
        for n in range(2, 9):
            for _ in range(200):
                x = self.rng.standard_normal(n)
                y = decreasing_matrix(self.rng, n, normalized=False)
                lower, upper = ks_bounds(x, y)
                value = exact_average(x, y).value
                self.assertLessEqual(lower, value + 1e-12)
                self.assertLessEqual(value, upper + 1e-12)

    def test_rowsum_constants(self):
        for n in range(2, 8):
            for instance in generate_campaign(100, [n], seed=n):
                report = verify_sandwich(instance.x, instance.matrix, Variant.ROWSUM_NORMALIZED)
                self.assertTrue(report.passed, report.to_dict())

    def test_scaled_constants(self):
        for n in range(2, 8):
            for instance in generate_campaign(100, [n], seed=100 + n):
                report = verify_sandwich(instance.x, instance.matrix, Variant.SCALED_BY_N)
                self.assertTrue(report.passed, report.to_dict())

    def test_all_ones_ratio(self):
        for n in range(1, 8):
            x = self.rng.standard_normal(n)
            report = verify_sandwich(x, np.ones((n, n)), Variant.SCALED_BY_N)
            self.assertEqual(report.A, float(np.max(np.abs(x))))
            self.assertAlmostEqual(report.ratio, 1.0, places=9)


class TestBallInclusions(unittest.TestCase):
    """B inside the unit ball inside 3B."""

    def setUp(self):
        self.rng = np.random.default_rng(31)

    def test_vertices_in_unit_ball(self):
        for n in range(1, 7):
            g = functions_from_matrix(decreasing_matrix(self.rng, n))
            for v in ball_B_vertices(g.source, include_signs=n <= 4):
                self.assertLessEqual(g.space.modular(v), 1.0 + MODULAR_TOL)

    def test_witnesses_on_boundary(self):
        for n in range(2, 7):
            g = functions_from_matrix(decreasing_matrix(self.rng, n))
            for x in sample_boundary_points(g.space, 1000, self.rng):
                self.assertTrue(decompose_lemma31(g, x).is_valid())


class TestConverseConstruction(unittest.TestCase):
    """Matrix built from power functions."""

    def test_power_rows(self):
        rng = np.random.default_rng(41)
        exponents = [1.0, 1.5, 2.0, 3.0]
        functions = [PowerOrlicz(p) for p in exponents]
        y = matrix_from_functions(functions)
        self.assertTrue(np.all(np.diff(y.entries, axis=1) <= 0))
        g = functions_from_matrix(y, Variant.SCALED_BY_N, Side.PRIMAL)
        self.assertLessEqual(round_trip_error(functions, g), 1e-10)
        for _ in range(20):
            x = rng.standard_normal(len(exponents))
            self.assertTrue(verify_converse(functions, x).passed)
            self.assertTrue(verify_sandwich(x, y.entries / y.n, Variant.ROWSUM_NORMALIZED).passed)


class TestApproximationNorm(unittest.TestCase):
    """Factor-2 equivalence of the a-norm."""

    def test_lemma51_campaign(self):
        rng = np.random.default_rng(51)
        for _ in range(100):
            N = int(rng.integers(1, 9))
            n = int(rng.integers(1, min(6, N) + 1))
            a = decreasing_matrix(rng, n, N)
            x = rng.standard_normal(n)
            report = verify_lemma51(a, x)
            self.assertTrue(report.passed, report.to_dict())
            self.assertEqual(a_norm(a, x), a_norm_bruteforce(a, x))


class TestConjugation(unittest.TestCase):
    """Biconjugation and the power dual pair."""

    def test_biconjugate(self):
        rng = np.random.default_rng(71)
        for _ in range(500):
            N = int(rng.integers(1, 9))
            weights = decreasing_matrix(rng, 1, N)[0]
            m = from_decreasing_weights(weights, float(rng.uniform(0.2, 3.0)))
            self.assertTrue(m.conjugate().conjugate().equals(m, 1e-12))

    def test_power_pair(self):
        for p in (1.25, 1.5, 2.0, 3.0, 4.5):
            q = p / (p - 1)
            conjugate = PowerOrlicz(p, 1.0 / p).conjugate()
            self.assertAlmostEqual(conjugate.p, q, delta=1e-12)
            self.assertAlmostEqual(conjugate.coefficient, 1.0 / q, delta=1e-12)


class TestMonteCarlo(unittest.TestCase):
    """Confidence intervals and reproducibility."""

    def test_calibration(self):
        rng = np.random.default_rng(81)
        for n in (5, 6, 7):
            x = rng.standard_normal(n)
            y = decreasing_matrix(rng, n)
            exact = exact_average(x, y).value
            hits = 0
            for seed in range(100):
                estimate = mc_average(x, y, trials=100_000, seed=seed)
                hits += abs(estimate.value - exact) <= estimate.half_width
            self.assertGreaterEqual(hits, 97)
            rerun = mc_average(x, y, trials=100_000, seed=99)
            self.assertEqual(rerun, mc_average(x, y, trials=100_000, seed=99))


class TestPerformance(unittest.TestCase):
    """Desk-scale running times."""

    def test_exact_average_n10(self):
        rng = np.random.default_rng(91)
        x = rng.standard_normal(10)
        y = decreasing_matrix(rng, 10)
        start = time.perf_counter()
        value = exact_average(x, y).value
        self.assertLess(time.perf_counter() - start, 5.0)
        lower, upper = ks_bounds(x, y)
        self.assertTrue(lower - 1e-12 <= value <= upper + 1e-12)

    def test_top_k_sum_million(self):
        values = np.random.default_rng(92).uniform(size=1_000_000)
        timings = []
        for _ in range(3):
            start = time.perf_counter()
            result = top_k_sum(values, 1000)
            timings.append(time.perf_counter() - start)
        self.assertEqual(result, math.fsum(decreasing_rearrangement(values)[:1000]))
        self.assertLess(min(timings), 0.1)


if __name__ == '__main__':
    unittest.main()

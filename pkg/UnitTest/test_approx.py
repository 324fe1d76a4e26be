#!/usr/bin/env python3

"""
Test Approximation Norm
-----------------------
Unit tests for the a-norm, its brute-force oracle and the factor-2
equivalence with the Musielak-Orlicz norm.
"""

import os
import sys
import unittest

import numpy as np

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from UnitTest.test_base import BaseTestCase

from orlicz_sim.approx import (ApproxInstance, a_norm, a_norm_allocation, a_norm_bruteforce, approx_space,
                               verify_lemma51)
from orlicz_sim.combinat import ks_bounds
from orlicz_sim.errors import DimensionError, EnumerationLimitError, ValidationError

A_SMALL = [[0.7, 0.3], [0.6, 0.4]]


class TestANorm(BaseTestCase):
    """Top-N evaluation of the a-norm."""

    def random_instance(self, max_n=6, max_N=6):
        N = int(self.rng.integers(1, max_N + 1))
        n = int(self.rng.integers(1, min(max_n, N) + 1))
        return self.random_decreasing_matrix(n, N), self.random_vector(n)

    def test_small_example(self):
        self.assertAlmostEqual(a_norm(A_SMALL, [1, 1]), 1.3, places=15)
        self.assertAlmostEqual(a_norm_bruteforce(A_SMALL, [1, 1]), 1.3, places=15)
        self.assertEqual(a_norm_allocation(A_SMALL, [1, 1]).tolist(), [1, 1])

    def test_single_coordinate(self):
        a = self.random_decreasing_matrix(3, 5)
        self.assertAlmostEqual(a_norm(a, [-2.5, 0, 0]), 2.5, places=12)
        self.assertEqual(a_norm_allocation(a, [-2.5, 0, 0]).tolist(), [5, 0, 0])

    def test_equal_rows(self):
        x = np.array([0.3, -1.7, 0.9])
        self.assertAlmostEqual(a_norm(np.full((3, 3), 1.0 / 3), x), 1.7, places=12)
        self.assertAlmostEqual(a_norm_bruteforce(np.full((3, 3), 1.0 / 3), x), 1.7, places=12)

    def test_one_row(self):
        a = self.random_decreasing_matrix(1, 4, normalized=False)
        self.assertAlmostEqual(a_norm_bruteforce(a, [-3.0]), 3.0 * a.sum(), places=12)

    def test_zero_vector(self):
        a = self.random_decreasing_matrix(3, 4)
        self.assertEqual(a_norm(a, np.zeros(3)), 0.0)
        self.assertEqual(a_norm_bruteforce(a, np.zeros(3)), 0.0)

    def test_matches_bruteforce_exactly(self):
        for _ in range(1000):
            a, x = self.random_instance()
            self.assertEqual(a_norm(a, x), a_norm_bruteforce(a, x))

    def test_allocation(self):
        for _ in range(100):
            a, x = self.random_instance()
            alloc = a_norm_allocation(a, x)
            self.assertEqual(int(alloc.sum()), a.shape[1])
            value = sum(abs(x[i]) * a[i, :l].sum() for i, l in enumerate(alloc))
            self.assertAlmostEqual(value, a_norm(a, x), places=12)

    def test_norm_properties(self):
        for _ in range(100):
            a, x = self.random_instance()
            z = self.random_vector(x.shape[0])
            nx = a_norm(a, x)
            self.assertEqual(a_norm(a, 2.0 * x), 2.0 * nx)
            self.assertEqual(a_norm(a, -0.5 * x), 0.5 * nx)
            self.assertLessEqual(a_norm(a, x + z), nx + a_norm(a, z) + 1e-12)
            self.assertGreater(nx, 0.0)
            bigger = x.copy()
            bigger[0] += np.sign(bigger[0]) * 0.5
            self.assertGreaterEqual(a_norm(a, bigger), nx)

    def test_link_with_rearrangement_bound(self):
        for _ in range(20):
            n = int(self.rng.integers(1, 8))
            y = self.random_decreasing_matrix(n)
            x = self.random_vector(n)
            self.assertAlmostEqual(a_norm(y, x), n * ks_bounds(x, y)[1], places=12)

    def test_errors(self):
        with self.assertRaises(DimensionError):
            a_norm(np.ones((3, 2)), [1, 1, 1])
        with self.assertRaises(DimensionError):
            a_norm(A_SMALL, [1, 1, 1])
        with self.assertRaises(ValidationError):
            a_norm([[0.3, 0.7]], [1])
        with self.assertRaises(EnumerationLimitError):
            a_norm_bruteforce(self.random_decreasing_matrix(3, 4), [1, 2, 3], limit=5)


class TestLemma51(BaseTestCase):
    """Factor-2 equivalence of the a-norm and the Musielak-Orlicz norm."""

    def test_equal_rows(self):
        x = np.array([1.0, -0.5])
        report = verify_lemma51(np.full((2, 2), 0.5), x)
        self.assertEqual(report.theorem, "lemma5.1")
        self.assertAlmostEqual(report.A, 1.0, places=12)
        self.assertAlmostEqual(report.L, 1.0, places=8)
        self.assertTrue(report.details["bruteforce_match"])
        self.assertTrue(report.passed)

    def test_unit_vector(self):
        a = self.random_decreasing_matrix(3, 5)
        report = verify_lemma51(a, [1.0, 0.0, 0.0])
        self.assertAlmostEqual(report.A, 1.0, places=12)
        self.assertTrue(report.passed)

    def test_random_campaign(self):
        for _ in range(100):
            N = int(self.rng.integers(1, 9))
            n = int(self.rng.integers(1, min(6, N) + 1))
            report = verify_lemma51(self.random_decreasing_matrix(n, N), self.random_vector(n))
            self.assertTrue(report.passed, report.to_dict())
            self.assertEqual(report.details["N"], N)

    def test_approx_space(self):
        space = approx_space(np.full((2, 3), 1.0 / 3))
        self.assertEqual(space.dimension, 2)
        self.assertAlmostEqual(space.luxemburg_norm([0.2, -0.6]), 0.6, places=8)

    def test_instance_validation(self):
        with self.assertRaises(DimensionError):
            ApproxInstance(A_SMALL, [1.0])
        with self.assertRaises(ValidationError):
            ApproxInstance([[0.5, 0.4]], [1.0])
        instance = ApproxInstance(A_SMALL, [1.0, 2.0])
        self.assertIs(instance.space, instance.space)


if __name__ == '__main__':
    unittest.main()

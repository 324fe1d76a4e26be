#!/usr/bin/env python3

"""
Test Generation
---------------
Unit tests for generated spaces, the converse matrix construction, the
ball B and the sandwich verifications.
"""

import math
import os
import sys
import unittest

import numpy as np

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from UnitTest.test_base import BaseTestCase

from orlicz_sim.combinat import WeightMatrix, ks_bounds
from orlicz_sim.errors import EnumerationLimitError, ValidationError
from orlicz_sim.generation import (Side, Variant, ball_B_vertices, decompose_lemma31, functions_from_matrix,
                                   matrix_from_functions, round_trip_error, sample_boundary_points,
                                   sandwich_passes, sign_flip_decomposition, verify_converse,
                                   verify_lemma31, verify_rearrangement, verify_sandwich, vertex_count)
from orlicz_sim.orlicz import OrliczFunction, PowerOrlicz

Y_TWO = [[0.75, 0.25], [0.5, 0.5]]


class SqrtFunction(OrliczFunction):
    """M(t) = sqrt(t): normalized but concave, so not an Orlicz function."""

    def eval(self, t):
        return np.sqrt(np.asarray(t, dtype=np.float64))

    def inverse(self, v, sup_preimage=False):
        return float(v) ** 2

    def conjugate(self):
        raise NotImplementedError

    def to_dict(self):
        return {"kind": "sqrt"}


class TestFunctionsFromMatrix(BaseTestCase):
    """Forward construction matrix -> functions."""

    def test_equal_weights_give_identity(self):
        n = 4
        g = functions_from_matrix(np.full((n, n), 1.0 / n))
        for f in g.space.functions:
            for t in (0.1, 0.37, 0.8, 1.0):
                self.assertAlmostEqual(f.eval(t), t, places=12)

    def test_two_by_two(self):
        g = functions_from_matrix(Y_TWO)
        m1, m2 = g.space.functions
        np.testing.assert_allclose(m1.breakpoints, [[0, 0], [0.75, 0.5], [1, 1]], atol=1e-12)
        self.assertAlmostEqual(m2.eval(0.3), 0.3, places=12)
        self.assertEqual(g.n, 2)
        self.assertEqual(g.scale, 1.0)

    def test_scaled_variant(self):
        g = functions_from_matrix(np.ones((3, 3)), Variant.SCALED_BY_N)
        self.assertAlmostEqual(g.scale, 1.0 / 3)
        self.assertAlmostEqual(g.space.functions[0].eval(2.0 / 3), 2.0 / 3, places=12)

    def test_generating_equalities(self):
        for n in range(1, 8):
            for variant in Variant:
                g = functions_from_matrix(self.random_decreasing_matrix(n), variant)
                self.assertTrue(g.check_generating_equalities())
                self.assertLessEqual(float(np.max(g.generating_errors())), 1e-12)

    def test_sides(self):
        y = self.random_decreasing_matrix(3)
        primal = functions_from_matrix(y, side=Side.PRIMAL)
        dual = functions_from_matrix(y, side="dual")
        self.assertIs(primal.primal_space(), primal.space)
        self.assertIs(dual.dual_space(), dual.space)
        self.assertIs(dual.primal_space(), dual.space.conjugate())

    def test_rejects_bad_rows(self):
        with self.assertRaises(ValidationError):
            functions_from_matrix([[0.5, 0.4], [0.5, 0.5]])
        with self.assertRaises(ValidationError):
            functions_from_matrix([[0.25, 0.75], [0.5, 0.5]], Variant.SCALED_BY_N)
        with self.assertRaises(ValidationError):
            functions_from_matrix(Y_TWO, "sideways")

    def test_rowsum_drift_is_rescaled(self):
        g = functions_from_matrix([[0.75 + 1e-10, 0.25], [0.5, 0.5]])
        self.assertAlmostEqual(math.fsum(g.source.row(0)), 1.0, places=15)


class TestMatrixFromFunctions(BaseTestCase):
    """Converse construction functions -> matrix."""

    def test_identity_functions(self):
        y = matrix_from_functions([PowerOrlicz(1.0)] * 3)
        np.testing.assert_allclose(y.entries, np.ones((3, 3)), atol=1e-12)

    def test_square_function(self):
        y = matrix_from_functions([PowerOrlicz(2.0)] * 2)
        np.testing.assert_allclose(y.row(0), [1.41421356, 0.58578644], atol=1e-8)

    def test_rows_nonincreasing(self):
        for _ in range(10):
            functions = [PowerOrlicz(p) for p in self.rng.uniform(1.0, 4.0, size=5)]
            y = matrix_from_functions(functions)
            self.assertTrue(np.all(np.diff(y.entries, axis=1) <= 0))

    def test_round_trip(self):
        functions = [PowerOrlicz(p) for p in self.rng.uniform(1.0, 4.0, size=6)]
        g = functions_from_matrix(matrix_from_functions(functions), Variant.SCALED_BY_N, Side.PRIMAL)
        self.assertLessEqual(round_trip_error(functions, g), 1e-10)

    def test_columns(self):
        y = matrix_from_functions([PowerOrlicz(2.0)] * 2, columns=5)
        self.assertEqual(y.shape, (2, 5))

    def test_rejects_non_normalized(self):
        with self.assertRaises(ValidationError):
            matrix_from_functions([PowerOrlicz(2.0, 3.0)])

    def test_rejects_non_convex(self):
        with self.assertRaises(ValidationError) as ctx:
            matrix_from_functions([PowerOrlicz(2.0), SqrtFunction()])
        self.assertIn("row 1 is not nonincreasing", str(ctx.exception))

    def test_linear_rows_survive_rounding(self):
        for N in (3, 7, 10):
            y = matrix_from_functions([PowerOrlicz(1.0)], columns=N)
            np.testing.assert_allclose(y.row(0), np.ones(N), atol=1e-12)


class TestBallB(BaseTestCase):
    """Generating points of B and the 3B witnesses."""

    def test_one_dimensional_vertices(self):
        vertices = ball_B_vertices([[1.0]], include_signs=True)
        nonzero = sorted(float(v[0]) for v in vertices if np.any(v != 0))
        self.assertEqual(len(vertices), 3)
        self.assertEqual(nonzero, [-1.0, 1.0])

    def test_two_dimensional_vertices(self):
        vertices = {tuple(v.tolist()) for v in ball_B_vertices(np.ones((2, 2)))}
        self.assertEqual(vertices, {(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0), (0.0, 2.0), (1.0, 1.0)})

    def test_vertex_count(self):
        self.assertEqual(vertex_count(3), 20)
        self.assertEqual(len(ball_B_vertices(self.random_decreasing_matrix(3))), 20)
        with self.assertRaises(EnumerationLimitError):
            ball_B_vertices(np.ones((7, 7)))

    def test_vertices_inside_unit_ball(self):
        for n in range(1, 6):
            g = functions_from_matrix(self.random_decreasing_matrix(n))
            for v in ball_B_vertices(g.source, include_signs=True):
                self.assertLessEqual(g.space.modular(v), 1 + 1e-12)

    def test_first_column_witness(self):
        g = functions_from_matrix(self.random_decreasing_matrix(4))
        witness = decompose_lemma31(g, g.source.entries[:, 0])
        self.assertEqual(witness.J, ())
        self.assertEqual(witness.I, (0, 1, 2, 3))
        self.assertTrue(witness.is_valid())

    def test_zero_witness(self):
        g = functions_from_matrix(self.random_decreasing_matrix(3))
        witness = decompose_lemma31(g, np.zeros(3))
        self.assertEqual(witness.J, ())
        self.assertFalse(np.any(witness.x_I) or np.any(witness.z_J) or np.any(witness.w_J))

    def test_boundary_witnesses(self):
        for n in range(1, 7):
            for side in Side:
                g = functions_from_matrix(self.random_decreasing_matrix(n), side=side)
                for x in sample_boundary_points(g.space, 200, self.rng):
                    witness = decompose_lemma31(g, x)
                    self.assertEqual(witness.violations(), [])
                    np.testing.assert_array_equal(witness.x, x)
                    self.assertLessEqual(sum(witness.k.values()), n)

    def test_outside_ball_rejected(self):
        g = functions_from_matrix(self.random_decreasing_matrix(3))
        with self.assertRaises(ValidationError):
            decompose_lemma31(g, [2.0, 2.0, 2.0])
        with self.assertRaises(ValidationError):
            decompose_lemma31(functions_from_matrix(np.full((2, 3), 1.0 / 3)), [0.1, 0.1])

    def test_sign_flips(self):
        v = np.array([1.0, 2.0, 0.5])
        u = np.array([0.5, -2.0, 0.0])
        signs, weights = sign_flip_decomposition(v, u)
        self.assertAlmostEqual(weights.sum(), 1.0, places=12)
        self.assertTrue(np.all(weights > 0))
        np.testing.assert_allclose(weights @ (signs * v), u, atol=1e-12)
        with self.assertRaises(ValidationError):
            sign_flip_decomposition(v, [2.0, 0.0, 0.0])


class TestSandwichVerification(BaseTestCase):
    """Report-producing checks."""

    def test_identity_matrix_scaled(self):
        x = np.array([0.5, -3.0, 1.25, 2.0])
        report = verify_sandwich(x, np.ones((4, 4)), Variant.SCALED_BY_N)
        self.assertEqual(report.theorem, "thm3.3")
        self.assertEqual(report.A, 3.0)
        self.assertAlmostEqual(report.L, 3.0, places=8)
        self.assertAlmostEqual(report.ratio, 1.0, places=8)
        self.assertTrue(report.passed)

    def test_two_by_two_rowsum(self):
        report = verify_sandwich([1, 1], Y_TWO)
        self.assertEqual(report.theorem, "thm3.2")
        self.assertEqual((report.c_low, report.c_high), (1.0 / 12, 1.0))
        self.assertTrue(report.passed)

    def test_random_campaign_exact(self):
        for _ in range(20):
            n = int(self.rng.integers(2, 8))
            y = self.random_decreasing_matrix(n)
            x = self.random_vector(n)
            for variant in Variant:
                self.assertTrue(verify_sandwich(x, y, variant).passed)

    def test_random_campaign_bounds(self):
        for _ in range(20):
            n = int(self.rng.integers(2, 20))
            report = verify_sandwich(self.random_vector(n), self.random_decreasing_matrix(n), method="bounds")
            self.assertEqual(report.method, "bounds")
            self.assertTrue(report.passed)

    def test_monte_carlo_report(self):
        y = self.random_decreasing_matrix(12)
        report = verify_sandwich(self.random_vector(12), y, method="mc", trials=2000, seed=7)
        self.assertEqual(report.seed, 7)
        self.assertEqual(report.details["trials"], 2000)
        self.assertTrue(report.passed)

    def test_rearrangement(self):
        for _ in range(20):
            n = int(self.rng.integers(1, 7))
            x = self.random_vector(n)
            y = self.random_decreasing_matrix(n, normalized=False)
            report = verify_rearrangement(x, y)
            self.assertTrue(report.passed)
            self.assertAlmostEqual(report.L, 2 * n * ks_bounds(x, y)[0], places=12)

    def test_sandwich_passes_rules(self):
        from orlicz_sim.combinat import AverageEstimate, AverageMethod
        exact = AverageEstimate(value=1.0, method=AverageMethod.EXACT)
        self.assertTrue(sandwich_passes(exact, 1.0, 0.5, 2.0))
        self.assertFalse(sandwich_passes(exact, 1.0, 1.5, 2.0))
        bounds = AverageEstimate(value=1.0, method=AverageMethod.BOUNDS, half_width=0.5)
        self.assertTrue(sandwich_passes(bounds, 1.0, 1.0, 1.5))
        self.assertFalse(sandwich_passes(bounds, 1.0, 1.0, 1.4))
        mc = AverageEstimate(value=2.05, method=AverageMethod.MONTE_CARLO, half_width=0.1)
        self.assertTrue(sandwich_passes(mc, 1.0, 0.5, 2.0))

    def test_converse(self):
        functions = [PowerOrlicz(p) for p in self.rng.uniform(1.0, 4.0, size=5)]
        report = verify_converse(functions, self.random_vector(5))
        self.assertEqual(report.theorem, "thm4.1")
        self.assertTrue(report.details["rows_nonincreasing"])
        self.assertLessEqual(report.details["round_trip_error"], 1e-10)
        self.assertTrue(report.passed)

    def test_converse_rejects_non_convex(self):
        with self.assertRaises(ValidationError):
            verify_converse([SqrtFunction()] * 3, self.random_vector(3))

    def test_lemma31(self):
        for side in Side:
            g = functions_from_matrix(self.random_decreasing_matrix(4), side=side)
            report = verify_lemma31(g, samples=100, rng=self.rng)
            self.assertEqual(report.theorem, "lemma3.1")
            self.assertEqual(report.details["vertices"], vertex_count(4))
            self.assertEqual(report.details["side"], side.value)
            self.assertTrue(report.passed)

    def test_lemma31_requires_square(self):
        g = functions_from_matrix(WeightMatrix(np.full((2, 3), 1.0 / 3)))
        with self.assertRaises(ValidationError):
            verify_lemma31(g, samples=10, rng=self.rng)


if __name__ == '__main__':
    unittest.main()

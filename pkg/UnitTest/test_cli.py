#!/usr/bin/env python3

"""
Test Command Line Interface
---------------------------
Unit tests for the gen, verify, norm and average commands.
"""

import contextlib
import io
import json
import os
import sys
import unittest

import numpy as np

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from UnitTest.test_base import BaseTestCase

from orlicz_sim.interfaces import main
from orlicz_sim.utils.instances import Instance


class CLITestCase(BaseTestCase):
    """Runs main() with captured output."""

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def write_instance(self, name, matrix, x, **extra):
        path = os.path.join(self.temp_dir, name)
        with open(path, "w") as f:
            json.dump({"matrix": matrix, "x": x, **extra}, f)
        return path


class TestGenCommand(CLITestCase):

    def test_deterministic_files(self):
        first = os.path.join(self.temp_dir, "a.json")
        second = os.path.join(self.temp_dir, "b.json")
        self.assertEqual(self.run_cli("gen", "--n", "3", "--N", "3", "--seed", "7", "--out", first)[0], 0)
        self.assertEqual(self.run_cli("gen", "--n", "3", "--N", "3", "--seed", "7", "--out", second)[0], 0)
        with open(first, "rb") as f1, open(second, "rb") as f2:
            self.assertEqual(f1.read(), f2.read())

    def test_rectangular_rows(self):
        code, out, _ = self.run_cli("gen", "--n", "4", "--N", "6", "--seed", "1")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["kind"], "RANDOM_NORMALIZED")
        matrix = np.array(data["matrix"])
        self.assertEqual(matrix.shape, (4, 6))
        self.assertTrue(np.all(np.diff(matrix, axis=1) <= 0))
        np.testing.assert_allclose(matrix.sum(axis=1), np.ones(4), atol=1e-9)

    def test_power_rows_identity(self):
        code, out, _ = self.run_cli("gen", "--n", "3", "--kind", "power_rows", "--variant", "scaled",
                                    "--exponents", "1", "1", "1")
        self.assertEqual(code, 0)
        np.testing.assert_allclose(json.loads(out)["matrix"], np.ones((3, 3)), atol=1e-12)

    def test_invalid_dimensions(self):
        code, _, err = self.run_cli("gen", "--n", "4", "--N", "2")
        self.assertEqual(code, 2)
        self.assertIn("Error:", err)


class TestVerifyCommand(CLITestCase):

    def test_campaign_json_lines(self):
        code, out, err = self.run_cli("verify", "thm2.1", "--campaign", "5", "--n", "4", "--seed", "3")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 6)
        self.assertTrue(all(json.loads(line)["pass"] for line in lines[:-1]))
        summary = json.loads(lines[-1])
        self.assertEqual((summary["instances"], summary["passed"]), (5, 5))
        self.assertIn("Campaign completed", err)

    def test_quiet(self):
        _, _, err = self.run_cli("verify", "thm3.2", "--n", "3", "-q")
        self.assertEqual(err, "")

    def test_all_ones_instance(self):
        path = self.write_instance("ones.json", np.ones((4, 4)).tolist(), [1, 1, 1, 1])
        code, out, _ = self.run_cli("verify", "thm3.3", "--instance", path)
        self.assertEqual(code, 0)
        report = json.loads(out.splitlines()[0])
        self.assertEqual(report["A"], 1.0)
        self.assertAlmostEqual(report["L"], 1.0, places=8)
        self.assertIsNone(report["seed"])

    def test_row_sum_violation(self):
        path = self.write_instance("bad.json", [[0.6, 0.5], [0.5, 0.5]], [1, 1])
        code, out, err = self.run_cli("verify", "lemma3.1", "--instance", path)
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("Error:", err)
        self.assertIn("sums to", err)

    def test_csv_output(self):
        path = os.path.join(self.get_output_dir(), "reports.csv")
        code, out, _ = self.run_cli("verify", "lemma5.1", "--n", "2", "3", "--N", "5", "--campaign", "2",
                                    "--format", "csv", "--out", path, "-q")
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(path) as f:
            rows = f.read().splitlines()
        self.assertTrue(rows[0].startswith("theorem,n,A,L"))
        self.assertEqual(len(rows), 5)

    def test_converse_campaign(self):
        code, out, _ = self.run_cli("verify", "thm4.1", "--n", "3", "--campaign", "2", "-q")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out.splitlines()[0])["theorem"], "thm4.1")


class TestNormAndAverageCommands(CLITestCase):

    def test_norm(self):
        code, out, _ = self.run_cli("norm", "3", "4", "--function", "power:2")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "5.00000000000")

    def test_norm_with_dual(self):
        code, out, _ = self.run_cli("norm", "1", "2", "3", "--function", "linear", "--dual")
        self.assertEqual(code, 0)
        first, second = out.splitlines()
        self.assertAlmostEqual(float(first), 6.0, places=10)
        self.assertEqual(second, "3.00000000000 6.00000000000")

    def test_norm_needs_space(self):
        code, _, err = self.run_cli("norm", "1", "2")
        self.assertEqual(code, 2)
        self.assertIn("space is required", err)

    def test_average_methods(self):
        path = self.write_instance("small.json", [[4, 3], [2, 1]], [1, 1])
        self.assertEqual(self.run_cli("average", "--instance", path)[1].strip(), "3.50000000000")
        self.assertEqual(self.run_cli("average", "--instance", path, "--method", "bounds")[1].strip(),
                         "1.75000000000 3.50000000000")
        first = self.run_cli("average", "--instance", path, "--method", "mc", "--trials", "1000", "--seed", "4")
        second = self.run_cli("average", "--instance", path, "--method", "mc", "--trials", "1000", "--seed", "4")
        self.assertEqual(first, second)
        self.assertEqual(len(first[1].split()), 2)

    def test_missing_instance(self):
        code, _, err = self.run_cli("average", "--instance", os.path.join(self.temp_dir, "none.json"))
        self.assertEqual(code, 2)
        self.assertIn("not found", err)

    def test_instance_loads_as_user(self):
        path = self.write_instance("user.json", [[0.5, 0.5]], [2.0])
        self.assertEqual(Instance.load(path).kind.value, "user")


if __name__ == '__main__':
    unittest.main()

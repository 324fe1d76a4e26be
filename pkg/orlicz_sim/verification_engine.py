#!/usr/bin/env python3

"""
Verification Engine
-------------------
Runs theorem checks on single instances and on campaigns of instances.
"""

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, TextIO

import numpy as np

from .analysis.reporting import VerificationReport
from .approx import verify_lemma51
from .combinat.averages import ENUMERATION_LIMIT
from .errors import ValidationError
from .generation import (Side, Variant, functions_from_matrix, verify_converse, verify_lemma31,
                         verify_rearrangement, verify_sandwich)
from .utils.instances import Instance

THEOREMS = ("thm2.1", "thm3.2", "thm3.3", "thm4.1", "lemma3.1", "lemma5.1")
SQUARE_THEOREMS = ("thm2.1", "thm3.2", "thm3.3", "lemma3.1")

DEFAULT_VERIFY_CONFIG: Dict[str, Any] = {
    'method': 'exact',
    'side': 'primal',
    'trials': 100_000,
    'seed': None,
    'samples': 1000,
    'enumeration_limit': ENUMERATION_LIMIT,
    'average_workers': None,
}


class VerificationEngine:
    """
    Engine for running theorem verifications.

    Single instances go through run_verification; campaigns through
    batch_verify, which may fan out over worker threads and always returns
    reports in instance order.
    """

    def __init__(self, verbose: bool = True, workers: Optional[int] = None, stream: TextIO = None):
        """
        Initialize the verification engine.

        Args:
            verbose (bool): Print progress lines
            workers (int, optional): Threads used by batch_verify
            stream: Progress output (defaults to stderr)
        """
        self._verbose = verbose
        self._workers = workers
        self._stream = stream

    def _log(self, message: str) -> None:
        if self._verbose:
            print(message, file=self._stream if self._stream is not None else sys.stderr)

    @staticmethod
    def parse_theorem(theorem: str) -> str:
        key = str(theorem).strip().lower()
        if key not in THEOREMS:
            raise ValidationError(f"Unknown theorem: {theorem} (choose from {', '.join(THEOREMS)})")
        return key

    def run_verification(self, theorem: str, instance: Instance,
                         verify_config: Optional[Dict[str, Any]] = None) -> VerificationReport:
        """
        Verify one theorem on one instance.

        Args:
            theorem (str): One of THEOREMS
            instance (Instance): The instance
            verify_config (dict): Options overriding DEFAULT_VERIFY_CONFIG:
                - method (str): 'exact', 'mc' or 'bounds' for the permutation average
                - side (str): 'primal' or 'dual' for lemma3.1
                - trials (int): Monte Carlo trials
                - seed (int): Monte Carlo seed (defaults to the instance seed)
                - samples (int): Boundary points for lemma3.1
                - enumeration_limit (int): Largest n for exact averages
                - average_workers (int): Threads inside one average

        Returns:
            VerificationReport: The report, carrying the instance seed

        Raises:
            ValidationError: If the instance does not fit the theorem
        """
        theorem = self.parse_theorem(theorem)
        config = dict(DEFAULT_VERIFY_CONFIG)
        config.update(verify_config or {})

        if theorem in SQUARE_THEOREMS and instance.n != instance.N:
            raise ValidationError(f"{theorem} needs a square matrix, got {instance.n}x{instance.N}")

        seed = config.get('seed')
        if seed is None:
            seed = instance.seed if instance.seed is not None else 0
        average_options = {
            'method': config.get('method', 'exact'),
            'trials': int(config.get('trials', 100_000)),
            'seed': int(seed),
            'limit': int(config.get('enumeration_limit', ENUMERATION_LIMIT)),
            'workers': config.get('average_workers'),
        }

        if theorem == "thm2.1":
            report = verify_rearrangement(instance.x, instance.matrix, **average_options)
        elif theorem == "thm3.2":
            report = verify_sandwich(instance.x, instance.matrix, Variant.ROWSUM_NORMALIZED, **average_options)
        elif theorem == "thm3.3":
            report = verify_sandwich(instance.x, instance.matrix, Variant.SCALED_BY_N, **average_options)
        elif theorem == "thm4.1":
            report = verify_converse(instance.functions(), instance.x, **average_options)
        elif theorem == "lemma3.1":
            g = functions_from_matrix(instance.matrix, Variant.ROWSUM_NORMALIZED,
                                      Side.parse(config.get('side', 'primal')))
            report = verify_lemma31(g, samples=int(config.get('samples', 1000)),
                                    rng=np.random.default_rng(int(seed)))
        else:
            report = verify_lemma51(instance.matrix, instance.x)

        report.seed = instance.seed
        return report

    def batch_verify(self, instances: List[Instance], theorem: str,
                     verify_config: Optional[Dict[str, Any]] = None,
                     status_callback: Optional[Callable] = None) -> List[VerificationReport]:
        """
        Verify a theorem on every instance of a campaign.

        Args:
            instances (List[Instance]): Campaign instances
            theorem (str): One of THEOREMS
            verify_config (dict): Options as in run_verification
            status_callback (Callable): Optional callback for progress updates

        Returns:
            list: Reports in instance order

        Raises:
            ValueError: The first validation error of any instance, after it is reported
        """
        theorem = self.parse_theorem(theorem)
        if not instances:
            self._log("No instances provided for verification")
            return []

        total = len(instances)
        self._log(f"Starting {theorem} verification for {total} instances...")
        start_time = time.time()

        def verify_one(index: int) -> VerificationReport:
            progress = (index / total) * 100
            self._log(f"[{progress:.1f}%] Verifying instance {index} ({index + 1}/{total})...")
            if status_callback:
                status_callback(index=index, status="running", progress=progress)
            try:
                report = self.run_verification(theorem, instances[index], verify_config)
            except ValueError as ve:
                self._log(f"Error verifying instance {index}: {ve}")
                if status_callback:
                    status_callback(index=index, status="error", error=str(ve), progress=progress)
                raise
            if status_callback:
                status_callback(index=index, status="completed" if report.passed else "failed",
                                progress=progress)
            return report

        if self._workers and self._workers > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                reports = list(executor.map(verify_one, range(total)))
        else:
            reports = [verify_one(i) for i in range(total)]

        passed = sum(1 for r in reports if r.passed)
        self._log(f"Campaign completed in {time.time() - start_time:.2f} seconds: "
                  f"{passed}/{total} passed")
        return reports

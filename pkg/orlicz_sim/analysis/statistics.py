#!/usr/bin/env python3

"""
Statistics Module
-----------------
Aggregate statistics over verification campaigns.
"""

from typing import Any, Dict, Iterable

import numpy as np


def calculate_ratio_statistics(reports: Iterable) -> Dict[str, Any]:
    """
    Pass counts and the distribution of A / L across a campaign.

    Args:
        reports: VerificationReport objects

    Returns:
        dict: instances, passed, failed and min/max/mean/median ratio
              (ratios are None when no report carries both A and L)
    """
    reports = list(reports)
    passed = sum(1 for r in reports if r.passed)
    ratios = np.array([r.ratio for r in reports if r.ratio is not None], dtype=np.float64)

    if ratios.size == 0:
        ratio_stats = {"min_ratio": None, "max_ratio": None, "mean_ratio": None, "median_ratio": None}
    else:
        ratio_stats = {
            "min_ratio": float(np.min(ratios)),
            "max_ratio": float(np.max(ratios)),
            "mean_ratio": float(np.mean(ratios)),
            "median_ratio": float(np.median(ratios)),
        }

    return {
        "instances": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        **ratio_stats,
    }


def calculate_margin(report) -> float:
    """
    Relative distance of A from the nearer sandwich end, as a fraction of L.

    Negative when the report fails its sandwich; NaN when A or L is missing.
    """
    if report.A is None or report.L is None or report.L == 0:
        return float("nan")
    ratio = report.A / report.L
    return float(min(ratio - report.c_low, report.c_high - ratio))

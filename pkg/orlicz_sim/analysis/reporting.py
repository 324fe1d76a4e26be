#!/usr/bin/env python3

"""
Reporting Module
----------------
Verification reports: one JSON object per verified instance, a campaign
summary line, and a per-instance CSV table.
"""

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, TextIO

import pandas as pd

from ..errors import ValidationError
from .data_storage import NumpyEncoder
from .statistics import calculate_margin, calculate_ratio_statistics

REPORT_FIELDS = ["theorem", "n", "A", "L", "c_low", "c_high", "pass", "method", "seed"]


@dataclass
class VerificationReport:
    """
    Outcome of checking one inequality on one instance.

    A is the combinatorial quantity (an average or the a-norm), L the norm it
    is compared with, and pass records c_low * L <= A <= c_high * L (or the
    theorem's own criterion when A and L are not applicable).
    """
    theorem: str
    n: int
    A: Optional[float]
    L: Optional[float]
    c_low: float
    c_high: float
    passed: bool
    method: str
    seed: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[float]:
        if self.A is None or self.L is None or self.L == 0:
            return None
        return self.A / self.L

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "theorem": self.theorem,
            "n": self.n,
            "A": self.A,
            "L": self.L,
            "c_low": self.c_low,
            "c_high": self.c_high,
            "pass": self.passed,
            "method": self.method,
            "seed": self.seed,
        }
        if self.details:
            data["details"] = self.details
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        missing = [k for k in REPORT_FIELDS if k not in data]
        if missing:
            raise ValidationError(f"report is missing fields: {missing}")
        return cls(
            theorem=data["theorem"],
            n=int(data["n"]),
            A=None if data["A"] is None else float(data["A"]),
            L=None if data["L"] is None else float(data["L"]),
            c_low=float(data["c_low"]),
            c_high=float(data["c_high"]),
            passed=bool(data["pass"]),
            method=data["method"],
            seed=data["seed"],
            details=dict(data.get("details", {})),
        )


def emit_report(report: VerificationReport) -> str:
    """Serialize a report as a single JSON line."""
    return json.dumps(report.to_dict(), cls=NumpyEncoder)


def parse_report(line: str) -> VerificationReport:
    """Parse a line written by emit_report."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise ValidationError(f"malformed report line: {e}") from e
    return VerificationReport.from_dict(data)


def summary_record(reports: List[VerificationReport], theorem: Optional[str] = None) -> Dict[str, Any]:
    """
    Campaign summary: instance count, passes, failures and the range of A / L.

    Returns:
        dict: {"summary": true, "theorem", "instances", "passed", "failed", "min_ratio", "max_ratio"}
    """
    if theorem is None:
        theorem = reports[0].theorem if reports else None
    stats = calculate_ratio_statistics(reports)
    return {
        "summary": True,
        "theorem": theorem,
        "instances": stats["instances"],
        "passed": stats["passed"],
        "failed": stats["failed"],
        "min_ratio": stats["min_ratio"],
        "max_ratio": stats["max_ratio"],
    }


def reports_to_frame(reports: Iterable[VerificationReport]) -> pd.DataFrame:
    """One row per report with the REPORT_FIELDS columns plus the ratio A / L and its sandwich margin."""
    rows = []
    for report in reports:
        row = report.to_dict()
        row.pop("details", None)
        row["ratio"] = report.ratio
        row["margin"] = calculate_margin(report)
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_FIELDS + ["ratio", "margin"])


def write_reports(reports: List[VerificationReport], stream: TextIO, fmt: str = "json",
                  theorem: Optional[str] = None) -> None:
    """
    Write a campaign to a text stream.

    Args:
        reports: Reports in instance order
        stream: Output stream
        fmt (str): 'json' (one line per report plus a summary line) or 'csv'
        theorem (str, optional): Theorem name for the summary line
    """
    if fmt == "csv":
        reports_to_frame(reports).to_csv(stream, index=False)
        return
    if fmt != "json":
        raise ValidationError(f"Unknown output format: {fmt}")
    for report in reports:
        stream.write(emit_report(report) + "\n")
    stream.write(json.dumps(summary_record(reports, theorem), cls=NumpyEncoder) + "\n")


def save_reports_csv(reports: Iterable[VerificationReport], path: str) -> str:
    """Save a campaign's reports as a CSV table."""
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(parent):
        os.makedirs(parent)
    reports_to_frame(reports).to_csv(path, index=False)
    return path

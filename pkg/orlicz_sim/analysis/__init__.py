"""
Analysis Package
----------------
Report serialization, storage and campaign statistics.
"""

from .data_storage import NumpyEncoder, save_json, load_json, save_space, load_space
from .statistics import calculate_ratio_statistics, calculate_margin
from .reporting import (VerificationReport, emit_report, parse_report, summary_record,
                        reports_to_frame, write_reports, save_reports_csv)

__all__ = [
    'NumpyEncoder',
    'save_json',
    'load_json',
    'save_space',
    'load_space',
    'calculate_ratio_statistics',
    'calculate_margin',
    'VerificationReport',
    'emit_report',
    'parse_report',
    'summary_record',
    'reports_to_frame',
    'write_reports',
    'save_reports_csv'
]

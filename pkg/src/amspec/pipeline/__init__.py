"""
End-to-end experiments: sums of spectra, thresholds and thickness sweeps.
"""

from .experiment import (
    ExperimentConfig, ExperimentReport, TupleRecord, SpectrumCache,
    run_main_theorem, evaluate_tuple, empirical_threshold, DEFAULT_APPROX_ORDER,
)
from .threshold import ThresholdReport, find_threshold
from .sweep import thickness_sweep, SWEEP_COLUMNS
from .reporter import report_to_dict, report_frame, save_report

__all__ = [
    'ExperimentConfig', 'ExperimentReport', 'TupleRecord', 'SpectrumCache',
    'run_main_theorem', 'evaluate_tuple', 'empirical_threshold', 'DEFAULT_APPROX_ORDER',
    'ThresholdReport', 'find_threshold', 'thickness_sweep', 'SWEEP_COLUMNS',
    'report_to_dict', 'report_frame', 'save_report',
]

"""
amspec: almost Mathieu spectra by rational approximation, thickness of
interval unions, Gap Lemma checks and sums of Cantor spectra.
"""

__version__ = "1.0.1"

from .errors import AmspecError
from .sets import (
    Interval, IntervalUnion, make_union, thickness, minkowski_sum, iterated_sum,
    hausdorff_distance, is_interval,
)
from .gaplemma import check_newhouse, check_astels, verify_prediction
from .dioph import parse_frequency, convergents, dc_constants, GOLDEN_MEAN
from .amo import (
    AmoParams, transfer_matrix, fit_trace_model, spectrum_rational, spectrum_fixed_phase,
    spectrum_irrational, bloch_oracle, butterfly,
)
from .ids import count_below, ids_curve, label_gaps, estimate_holder
from .bounds import (
    BoundParams, perturbation_bounds, gap_length_bound, thickness_lower_bound, fit_gap_decay,
)
from .pipeline import ExperimentConfig, run_main_theorem, find_threshold, thickness_sweep

__all__ = [
    '__version__', 'AmspecError',
    'Interval', 'IntervalUnion', 'make_union', 'thickness', 'minkowski_sum', 'iterated_sum',
    'hausdorff_distance', 'is_interval',
    'check_newhouse', 'check_astels', 'verify_prediction',
    'parse_frequency', 'convergents', 'dc_constants', 'GOLDEN_MEAN',
    'AmoParams', 'transfer_matrix', 'fit_trace_model', 'spectrum_rational',
    'spectrum_fixed_phase', 'spectrum_irrational', 'bloch_oracle', 'butterfly',
    'count_below', 'ids_curve', 'label_gaps', 'estimate_holder',
    'BoundParams', 'perturbation_bounds', 'gap_length_bound', 'thickness_lower_bound',
    'fit_gap_decay', 'ExperimentConfig', 'run_main_theorem', 'find_threshold', 'thickness_sweep',
]

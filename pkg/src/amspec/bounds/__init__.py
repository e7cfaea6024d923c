"""
Bound calculators and empirical fits of their constants.
"""

from .calculators import (
    BoundParams, perturbation_bounds, gap_length_bound, thickness_lower_bound, kappa,
)
from .fitting import (
    LabeledSpectrum, GapDecayFit, fit_gap_decay, audit_lower_bound, AUDIT_COLUMNS,
)

__all__ = [
    'BoundParams', 'perturbation_bounds', 'gap_length_bound', 'thickness_lower_bound',
    'kappa', 'LabeledSpectrum', 'GapDecayFit', 'fit_gap_decay', 'audit_lower_bound',
    'AUDIT_COLUMNS',
]

"""
Integrated density of states, gap labeling and Hölder estimates.
"""

from .counting import (
    IdsCurve, count_below, ids_curve, volume_convergence, averaged_counts, sturm_counts,
)
from .labeling import GapLabelAssignment, label_gaps, best_label
from .holder import HolderEstimate, estimate_holder

__all__ = [
    'IdsCurve', 'count_below', 'ids_curve', 'volume_convergence', 'averaged_counts',
    'sturm_counts', 'GapLabelAssignment', 'label_gaps', 'best_label',
    'HolderEstimate', 'estimate_holder',
]

"""
Newhouse and Astels Gap Lemma checkers with an exact Minkowski-sum oracle.
"""

from .checker import (
    GapLemmaVerdict, check_newhouse, check_astels, astels_sum,
    normalized_thickness, tau_product,
)
from .oracle import PredictionCheck, verify_prediction

__all__ = [
    'GapLemmaVerdict', 'check_newhouse', 'check_astels', 'astels_sum',
    'normalized_thickness', 'tau_product', 'PredictionCheck', 'verify_prediction',
]

"""
Set algebra on finite unions of closed intervals.
"""

from .interval import (
    Interval, IntervalUnion, make_union, bounded_gaps, diameter, is_interval,
    hull, measure, largest_gap, affine, reflect, merge_small_gaps,
    minkowski_sum, iterated_sum, hausdorff_distance, exact_div,
)
from .thickness import GapReport, ThicknessReport, thickness
from .cantor import middle_cantor, middle_thirds, middle_halves, expected_thickness

__all__ = [
    'Interval', 'IntervalUnion', 'make_union', 'bounded_gaps', 'diameter',
    'is_interval', 'hull', 'measure', 'largest_gap', 'affine', 'reflect',
    'merge_small_gaps', 'minkowski_sum', 'iterated_sum', 'hausdorff_distance',
    'exact_div', 'GapReport', 'ThicknessReport', 'thickness',
    'middle_cantor', 'middle_thirds', 'middle_halves', 'expected_thickness',
]

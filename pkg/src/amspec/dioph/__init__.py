"""
Continued fractions, frequency specifications and Diophantine constants.
"""

from .frequency import (
    Rational, FrequencySpec, parse_frequency, parse_rational, rational_spec,
    GOLDEN_MEAN, RATIONAL, QUADRATIC, DECIMAL,
)
from .continued import (
    convergents, convergent_at, rational_approximant, value,
    label_targets, frac_multiples, certified_partial_quotients,
)
from .diophantine import DCReport, dc_constants, PLAIN, TWO_PI

__all__ = [
    'Rational', 'FrequencySpec', 'parse_frequency', 'parse_rational', 'rational_spec',
    'GOLDEN_MEAN', 'RATIONAL', 'QUADRATIC', 'DECIMAL',
    'convergents', 'convergent_at', 'rational_approximant', 'value',
    'label_targets', 'frac_multiples', 'certified_partial_quotients',
    'DCReport', 'dc_constants', 'PLAIN', 'TWO_PI',
]

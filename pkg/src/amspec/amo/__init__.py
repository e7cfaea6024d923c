"""
Almost Mathieu spectra: transfer matrices, trace model, band isolation,
rational and convergent-based spectra, Bloch oracle and butterfly datasets.
"""

from .transfer import AmoParams, Potential, cosine_potential, potential, transfer_matrix, period_trace, period_matrix
from .trace_model import TraceModel, fit_trace_model, delta_direct
from .spectrum import (
    SpectrumResult, spectrum_rational, spectrum_fixed_phase, spectrum_irrational,
    spectrum_for, successive_deltas,
)
from .bloch import bloch_oracle
from .butterfly import butterfly, butterfly_frame, butterfly_frequencies, BUTTERFLY_COLUMNS

__all__ = [
    'AmoParams', 'Potential', 'cosine_potential', 'potential', 'transfer_matrix', 'period_trace', 'period_matrix',
    'TraceModel', 'fit_trace_model', 'delta_direct',
    'SpectrumResult', 'spectrum_rational', 'spectrum_fixed_phase', 'spectrum_irrational',
    'spectrum_for', 'successive_deltas',
    'bloch_oracle', 'butterfly', 'butterfly_frame', 'butterfly_frequencies', 'BUTTERFLY_COLUMNS',
]

"""
Constants and default values for the amspec package.

This module centralizes numerical tolerances, grid sizes and environment names.
"""

from typing import Final

# === Band-edge search ===
DEFAULT_EDGE_TOL: Final[float] = 1e-10
DEFAULT_GAP_CLOSE_SCALE: Final[float] = 1e-9
GRID_FLOOR: Final[int] = 1024
GRID_NODES_PER_Q: Final[int] = 64
# rounding guard on the trace level, multiplied by q^2 * level
TRACE_NOISE_REL: Final[float] = 1e-13
EDGE_SCAN_MARGIN: Final[float] = 1.0
# circle samples used to bound a custom potential
POTENTIAL_SAMPLES: Final[int] = 4096

# === Trace model validation ===
FIT_RESIDUAL_SCALE: Final[float] = 1e-8
FIT_VALIDATION_POINTS: Final[int] = 64
LARGE_Q: Final[int] = 40
MAX_COUPLING_LARGE_Q: Final[float] = 1.0

# === Integrated density of states ===
DEFAULT_PHASE_AVG: Final[int] = 8
DEFAULT_N_MAX: Final[int] = 60
LABEL_TOL_FLOOR: Final[float] = 1e-4
LABEL_TOL_PER_SITE: Final[float] = 5.0
ZERO_PIVOT_NUDGE: Final[float] = 1e-300

# === Diophantine scans ===
DC_GUARD_DIGITS: Final[int] = 30

# === Output ===
SCHEMA_VERSION: Final[str] = "1.0"
INF_TOKEN: Final[str] = "+inf"
DEFAULT_OUTPUT_FOLDER: Final[str] = "results"

# === Environment ===
ENV_OUTPUT_DIR: Final[str] = "AMSPEC_OUTPUT_DIR"
ENV_THREADS: Final[str] = "AMSPEC_THREADS"
ENV_LOG_LEVEL: Final[str] = "AMSPEC_LOG_LEVEL"
ENV_GAP_CLOSE_SCALE: Final[str] = "AMSPEC_GAP_CLOSE_SCALE"


def default_gap_close_tol(lam: float, scale: float = DEFAULT_GAP_CLOSE_SCALE) -> float:
    """Coupling-scaled gap-closing tolerance, scale·(4 + 4|λ|)."""
    return scale * (4.0 + 4.0 * abs(lam))


def default_label_tol(volume: int) -> float:
    """Labeling tolerance max(5/N, 1e-4)."""
    return max(LABEL_TOL_PER_SITE / volume, LABEL_TOL_FLOOR)

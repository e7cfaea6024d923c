"""
Band isolation for {E : |F(E)| <= level}.

F is a degree-q polynomial in E (Δ for the phase union, t(·, ω) at fixed phase).
The scan nodes are a uniform grid plus the critical points of Δ, so F is
monotone on every cell and each level is crossed at most once per cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from ..errors import EdgeFindingFailure
from ..utils.constants import EDGE_SCAN_MARGIN, GRID_FLOOR, GRID_NODES_PER_Q, TRACE_NOISE_REL
from ..utils.logger import get_logger

logger = get_logger(__name__)

TraceFunction = Callable[[np.ndarray], np.ndarray]


@dataclass
class BandScan:
    """Band edges found by one scan, with the bookkeeping used for diagnostics."""

    bands: List[Tuple[float, float]]
    level: float
    guard: float
    n_nodes: int
    roots_upper: int
    roots_lower: int
    diagnostics: Dict[str, Any] = field(default_factory=dict)


def scan_nodes(hull: float, q: int, critical_points: Sequence[float] = ()) -> np.ndarray:
    """Uniform grid over [−hull−1, hull+1] merged with the critical points."""
    n = max(GRID_FLOOR, GRID_NODES_PER_Q * q)
    reach = hull + EDGE_SCAN_MARGIN
    grid = np.linspace(-reach, reach, n)
    crit = np.asarray([c for c in critical_points if -reach < c < reach], dtype=float)
    return np.unique(np.concatenate([grid, crit]))


def _bisect(F: TraceFunction, level: float, lo: np.ndarray, hi: np.ndarray,
            edge_tol: float) -> np.ndarray:
    """Vectorized bisection of F = level on cells where F − level changes sign."""
    if lo.size == 0:
        return lo
    below_lo = F(lo) <= level
    width = float(np.max(hi - lo))
    steps = max(0, math.ceil(math.log2(width / edge_tol))) if width > edge_tol else 0
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        same = (F(mid) <= level) == below_lo
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def _crossings(F: TraceFunction, nodes: np.ndarray, values: np.ndarray, level: float,
               edge_tol: float) -> np.ndarray:
    below = values <= level
    cells = np.nonzero(below[:-1] != below[1:])[0]
    return _bisect(F, level, nodes[cells], nodes[cells + 1], edge_tol)


def isolate_bands(F: TraceFunction, level: float, hull: float, q: int,
                  critical_points: Sequence[float], edge_tol: float) -> BandScan:
    """
    Locate the bands of {E : |F(E)| <= level}.

    Both levels ±level are raised by a rounding guard of order q²·ε·level, so
    tangencies (closed gaps) stay closed. Sorted roots pair into bands; each
    band midpoint is re-checked against the guarded level.

    Raises:
        EdgeFindingFailure: odd root count or a band whose midpoint is outside
    """
    guard = TRACE_NOISE_REL * q * q * level
    L = level + guard
    nodes = scan_nodes(hull, q, critical_points)
    values = F(nodes)

    upper = _crossings(F, nodes, values, L, edge_tol)
    lower = _crossings(lambda E: -F(E), nodes, -values, L, edge_tol)
    roots = np.sort(np.concatenate([upper, lower]))

    diagnostics = {
        "n_nodes": int(nodes.size),
        "roots_upper": int(upper.size),
        "roots_lower": int(lower.size),
        "level": level,
        "guard": guard,
        "endpoint_values": [float(values[0]), float(values[-1])],
    }
    if abs(values[0]) <= L or abs(values[-1]) <= L:
        raise EdgeFindingFailure("trace is inside the band level at the scan boundary", diagnostics)
    if roots.size % 2:
        raise EdgeFindingFailure(f"odd number of band edges ({roots.size})", diagnostics)

    bands = [(float(roots[i]), float(roots[i + 1])) for i in range(0, roots.size, 2)]
    if bands:
        mids = np.array([0.5 * (lo + hi) for lo, hi in bands])
        inside = np.abs(F(mids)) <= L
        # zero-width bands come from roots landing in one bisection cell
        width_ok = np.array([hi - lo <= 2 * edge_tol for lo, hi in bands])
        bad = np.nonzero(~(inside | width_ok))[0]
        if bad.size:
            diagnostics["bad_bands"] = [bands[i] for i in bad]
            raise EdgeFindingFailure(f"{bad.size} band midpoints fail the trace condition", diagnostics)
    if not bands:
        raise EdgeFindingFailure("no band edges found", diagnostics)

    logger.debug(f"band scan q={q}: {nodes.size} nodes, {roots.size} edges, {len(bands)} bands")
    return BandScan(bands=bands, level=level, guard=guard, n_nodes=int(nodes.size),
                    roots_upper=int(upper.size), roots_lower=int(lower.size),
                    diagnostics=diagnostics)

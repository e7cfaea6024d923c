"""
The sum-of-spectra experiment.

For every coupling tuple (λ_1, ..., λ_d) of the sweep grid: compute the
spectra, their thickness, the Astels verdict and the exact Minkowski sum,
and record whether the sum is a single interval.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Lock
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..amo.spectrum import SpectrumResult, spectrum_for
from ..dioph.frequency import FrequencySpec
from ..errors import AmspecError, ExperimentError, ValidationError
from ..gaplemma.oracle import PredictionCheck, verify_prediction
from ..sets.interval import is_interval
from ..sets.thickness import ThicknessReport, thickness
from ..utils.constants import DEFAULT_EDGE_TOL, DEFAULT_GAP_CLOSE_SCALE, SCHEMA_VERSION, default_gap_close_tol
from ..utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_APPROX_ORDER = 7


@dataclass
class ExperimentConfig:
    """Sweep definition for the sum-of-spectra experiment."""

    dims: int
    freq_specs: List[FrequencySpec]
    lambdas: List[List[float]]
    approx_order: int = DEFAULT_APPROX_ORDER
    edge_tol: float = DEFAULT_EDGE_TOL
    gap_close_scale: float = DEFAULT_GAP_CLOSE_SCALE
    label_tol: Optional[float] = None
    seeds: int = 0
    threads: int = 1
    threshold_bracket: Tuple[float, float] = (0.0, 1.0)
    search_orderings: bool = False

    def validate(self) -> 'ExperimentConfig':
        """
        Check the sweep against the experiment's hypotheses.

        Raises:
            ValidationError: citing the violated condition
        """
        if self.dims < 2:
            raise ValidationError(f"dims must be at least 2, got {self.dims}", key="dims")
        if len(self.freq_specs) != self.dims:
            raise ValidationError(
                f"freq_specs has {len(self.freq_specs)} entries but dims={self.dims}", key="freq_specs")
        if len(self.lambdas) != self.dims:
            raise ValidationError(
                f"lambdas has {len(self.lambdas)} sweeps but dims={self.dims}", key="lambdas")
        for k, sweep in enumerate(self.lambdas, start=1):
            if not sweep:
                raise ValidationError(f"coupling sweep {k} is empty", key="lambdas")
            if any(lam == 0 for lam in sweep):
                raise ValidationError(
                    f"coupling sweep {k} contains 0; the hypothesis is 0<|λ_{k}|", key="lambdas")
        if self.approx_order < 1:
            raise ValidationError("approx_order must be at least 1", key="approx_order")
        if not self.edge_tol > 0:
            raise ValidationError("edge_tol must be positive", key="tolerances.edge_tol")
        if not self.gap_close_scale >= 0:
            raise ValidationError("gap_close_scale must be non-negative", key="tolerances.gap_close_scale")
        if self.threads < 1:
            raise ValidationError("threads must be at least 1", key="threads")
        lo, hi = self.threshold_bracket
        if not 0 <= lo < hi:
            raise ValidationError("threshold_bracket must satisfy 0 <= lo < hi", key="threshold_bracket")
        return self

    def tuples(self) -> List[Tuple[float, ...]]:
        """The sweep grid, in lexicographic order of the per-dimension lists."""
        return list(itertools.product(*self.lambdas))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": self.dims,
            "freq_specs": [str(s) for s in self.freq_specs],
            "lambdas": [list(s) for s in self.lambdas],
            "approx_order": self.approx_order,
            "tolerances": {
                "edge_tol": self.edge_tol,
                "gap_close_scale": self.gap_close_scale,
                "label_tol": self.label_tol,
            },
            "seeds": self.seeds,
            "threads": self.threads,
            "threshold_bracket": list(self.threshold_bracket),
            "search_orderings": self.search_orderings,
        }


@dataclass
class TupleRecord:
    """Everything computed for one coupling tuple."""

    lambdas: Tuple[float, ...]
    spectra: List[SpectrumResult]
    thickness: List[ThicknessReport]
    check: PredictionCheck

    @property
    def is_interval(self) -> bool:
        return is_interval(self.check.oracle)

    @property
    def predicted_interval(self) -> bool:
        return self.check.verdict.predicts_interval

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambdas": list(self.lambdas),
            "spectra": [
                {"convergent": str(s.params.freq), "approx_order": s.approx_order,
                 "n_parts": len(s.union), "parts": [list(p.as_pair()) for p in s.union]}
                for s in self.spectra
            ],
            "thickness": [r.to_dict(with_gaps=False) for r in self.thickness],
            "verdict": self.check.verdict.to_dict(),
            "status": self.check.status,
            "oracle_parts": len(self.check.oracle),
            "oracle_sum": [list(p.as_pair()) for p in self.check.oracle],
            "is_interval": self.is_interval,
        }


@dataclass
class ExperimentReport:
    """Per-tuple records plus the empirical threshold."""

    config: ExperimentConfig
    records: List[TupleRecord] = field(default_factory=list)
    empirical_threshold: Optional[float] = None
    contradictions: int = 0

    def record_for(self, lambdas: Sequence[float]) -> TupleRecord:
        key = tuple(lambdas)
        for rec in self.records:
            if rec.lambdas == key:
                return rec
        raise KeyError(key)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config.to_dict(),
            "empirical_threshold": self.empirical_threshold,
            "contradictions": self.contradictions,
            "records": [r.to_dict() for r in self.records],
        }


class SpectrumCache:
    """Spectra computed once per (dimension, λ) within a run."""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self._store: Dict[Tuple[int, float], SpectrumResult] = {}
        self._lock = Lock()

    def get(self, dim: int, lam: float) -> SpectrumResult:
        key = (dim, lam)
        with self._lock:
            if key in self._store:
                return self._store[key]
        cfg = self.config
        result = spectrum_for(lam, cfg.freq_specs[dim], cfg.approx_order, cfg.edge_tol,
                              default_gap_close_tol(lam, cfg.gap_close_scale))
        with self._lock:
            return self._store.setdefault(key, result)


def evaluate_tuple(config: ExperimentConfig, lambdas: Sequence[float],
                   cache: Optional[SpectrumCache] = None) -> TupleRecord:
    """
    Spectra, thickness, verdict and oracle sum for one coupling tuple.

    Raises:
        ExperimentError: wrapping any module error, with the tuple attached
    """
    cache = cache or SpectrumCache(config)
    try:
        spectra = [cache.get(k, lam) for k, lam in enumerate(lambdas)]
        reports = [thickness(s.union, truncation_order=s.approx_order) for s in spectra]
        check = verify_prediction([s.union for s in spectra],
                                  search_orderings=config.search_orderings, strict=True)
    except AmspecError as exc:
        raise ExperimentError(f"{type(exc).__name__} at λ={tuple(lambdas)}: {exc}",
                              lambdas=tuple(lambdas)) from exc
    return TupleRecord(lambdas=tuple(lambdas), spectra=spectra, thickness=reports, check=check)


def empirical_threshold(records: Sequence[TupleRecord]) -> Optional[float]:
    """
    Largest sweep value m such that every tuple with max|λ| <= m is an interval.

    None when the smallest tuple already fails.
    """
    levels = sorted({max(abs(l) for l in rec.lambdas) for rec in records})
    best = None
    for m in levels:
        if all(rec.is_interval for rec in records if max(abs(l) for l in rec.lambdas) <= m):
            best = m
        else:
            break
    return best


def run_main_theorem(config: ExperimentConfig, threads: Optional[int] = None) -> ExperimentReport:
    """
    Run every coupling tuple of the sweep.

    Each tuple is recorded individually; nothing is extrapolated from
    neighbouring tuples. A verdict contradicted by the exact sum raises.
    `threads` overrides config.threads for this run only and leaves the
    config, and hence the report, untouched.
    """
    threads = config.threads if threads is None else max(1, threads)
    tuples = config.tuples()
    cache = SpectrumCache(config)

    def job(lams):
        return evaluate_tuple(config, lams, cache)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(job, tuples))
    else:
        records = [job(t) for t in tuples]

    report = ExperimentReport(config=config, records=records,
                              empirical_threshold=empirical_threshold(records))
    n_interval = sum(1 for r in records if r.is_interval)
    logger.info(f"experiment d={config.dims}: {len(records)} tuples, {n_interval} interval sums, "
                f"threshold={report.empirical_threshold}")
    return report

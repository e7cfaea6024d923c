"""
Report serialization for the experiment pipeline.
"""

from __future__ import annotations

import os
from typing import Any, Dict, List

import pandas as pd

from ..utils.io import write_csv, write_json
from .experiment import ExperimentReport


def report_to_dict(report: ExperimentReport) -> Dict[str, Any]:
    return report.to_dict()


def report_frame(report: ExperimentReport) -> pd.DataFrame:
    """One row per coupling tuple: λs, τs, S, predicted, oracle_parts, is_interval."""
    d = report.config.dims
    columns: List[str] = ([f"lambda_{k}" for k in range(1, d + 1)]
                          + [f"tau_{k}" for k in range(1, d + 1)]
                          + ["astels_sum", "predicted", "oracle_parts", "is_interval", "status"])
    rows = []
    for rec in report.records:
        verdict = rec.check.verdict
        if verdict.predicted_interval is not None:
            predicted = "interval"
        elif verdict.predicted_tau_lower_bound is not None:
            predicted = "tau_lower_bound"
        else:
            predicted = "none"
        row = {f"lambda_{k}": lam for k, lam in enumerate(rec.lambdas, start=1)}
        row.update({f"tau_{k}": float(r.tau) for k, r in enumerate(rec.thickness, start=1)})
        row.update({
            "astels_sum": float(verdict.astels_sum),
            "predicted": predicted,
            "oracle_parts": len(rec.check.oracle),
            "is_interval": rec.is_interval,
            "status": rec.check.status,
        })
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def save_report(report: ExperimentReport, out_dir: str, stem: str = "experiment") -> Dict[str, str]:
    """Write <stem>.json and <stem>.csv into out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    json_path = write_json(os.path.join(out_dir, f"{stem}.json"), report_to_dict(report))
    csv_path = write_csv(os.path.join(out_dir, f"{stem}.csv"), report_frame(report))
    return {"json": str(json_path), "csv": str(csv_path)}

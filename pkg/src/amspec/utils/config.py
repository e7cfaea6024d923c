"""
Ambient run configuration for the amspec package.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

# Try to load .env file if available
try:
    from dotenv import load_dotenv
    _env_path = Path(__file__).resolve().parents[3] / '.env'
    if _env_path.exists():
        load_dotenv(_env_path)
except ImportError:
    pass  # Silently skip if dotenv not available

from .constants import (
    DEFAULT_EDGE_TOL, DEFAULT_GAP_CLOSE_SCALE, DEFAULT_OUTPUT_FOLDER,
    ENV_GAP_CLOSE_SCALE, ENV_LOG_LEVEL, ENV_OUTPUT_DIR, ENV_THREADS,
    default_gap_close_tol,
)


@dataclass
class RunConfig:
    """Settings shared by every CLI subcommand."""

    output_folder: str = DEFAULT_OUTPUT_FOLDER
    threads: int = 1
    log_level: str = "INFO"
    edge_tol: float = DEFAULT_EDGE_TOL
    gap_close_scale: float = DEFAULT_GAP_CLOSE_SCALE

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.threads < 1:
            self.threads = 1
        if self.edge_tol <= 0:
            raise ValueError("edge_tol must be positive")
        if self.gap_close_scale < 0:
            raise ValueError("gap_close_scale must be non-negative")

    @classmethod
    def from_env(cls, output_folder: Optional[str] = None,
                 threads: Optional[int] = None,
                 log_level: Optional[str] = None) -> 'RunConfig':
        """Create configuration from environment variables, explicit arguments win."""
        env_threads = os.getenv(ENV_THREADS)
        env_scale = os.getenv(ENV_GAP_CLOSE_SCALE)
        return cls(
            output_folder=output_folder or os.getenv(ENV_OUTPUT_DIR, DEFAULT_OUTPUT_FOLDER),
            threads=threads if threads is not None else int(env_threads) if env_threads else 1,
            log_level=log_level or os.getenv(ENV_LOG_LEVEL, 'INFO'),
            gap_close_scale=float(env_scale) if env_scale else DEFAULT_GAP_CLOSE_SCALE,
        )

    def gap_close_tol(self, lam: float, override: Optional[float] = None) -> float:
        """Explicit tolerance if given, else gap_close_scale·(4 + 4|λ|)."""
        if override is not None:
            return override
        return default_gap_close_tol(lam, self.gap_close_scale)

    def ensure_output_folder(self) -> Path:
        path = Path(self.output_folder)
        path.mkdir(parents=True, exist_ok=True)
        return path

"""
Exception hierarchy for the amspec package.

Every domain failure raised by the library derives from AmspecError so the CLI
can map it to exit code 1 without swallowing programming errors.
"""

from typing import Any, Dict, Optional, Sequence


class AmspecError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.context: Dict[str, Any] = dict(context)


# === Set algebra ===
class EmptyInput(AmspecError):
    """An interval union was requested from an empty list."""


class BadInterval(AmspecError):
    """An interval with lo > hi was supplied."""


# === Gap lemmas ===
class TooFewSets(AmspecError):
    """A d-set check was called with fewer than two sets."""


class PredictionContradiction(AmspecError):
    """A Gap Lemma prediction disagrees with the exact Minkowski sum."""


# === Almost Mathieu spectra ===
class ModelMismatch(AmspecError):
    """The period trace did not fit Δ(E) + A cos + B sin within tolerance."""


class EdgeFindingFailure(AmspecError):
    """Band-edge root accounting is inconsistent with the degree-q structure."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message, diagnostics=diagnostics or {})
        self.diagnostics = diagnostics or {}


class CouplingOutOfRange(AmspecError):
    """Coupling outside the range where double-precision transfer products are trusted."""


# === Diophantine machinery ===
class FrequencyParseError(AmspecError):
    """A frequency string did not match the accepted grammar."""


class RationalInput(AmspecError):
    """A rational frequency was given where an irrational one is required."""


class PrecisionExhausted(AmspecError):
    """The stored digits cannot certify the requested quantity."""


# === Bound fitting ===
class InsufficientLabels(AmspecError):
    """Too few labeled gaps to fit the gap-decay envelope."""


# === Pipeline ===
class NoSwitchFound(AmspecError):
    """The interval predicate is constant over the sampled coupling range."""


class ExperimentError(AmspecError):
    """A module error raised while processing one coupling tuple."""

    def __init__(self, message: str, lambdas: Sequence[float]):
        super().__init__(message, lambdas=tuple(lambdas))
        self.lambdas = tuple(lambdas)


# === Configuration ===
class ParseError(AmspecError):
    """Malformed configuration file or unknown key."""

    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message, key=key, line=line)
        self.key = key
        self.line = line


class ValidationError(AmspecError):
    """A configuration or parameter value violates a documented invariant."""

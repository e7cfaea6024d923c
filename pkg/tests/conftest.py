"""
Shared pytest configuration: puts src/ on the import path and registers
hypothesis profiles.
"""

import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / 'src'))

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def golden():
    from amspec.dioph import GOLDEN_MEAN
    return GOLDEN_MEAN

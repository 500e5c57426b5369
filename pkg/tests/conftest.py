"""Shared pytest fixtures."""

import os
from collections.abc import Generator
from pathlib import Path

import numpy as np
import pytest

from coherence_lab.core.config import reset_settings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def clean_env() -> Generator[None, None, None]:
    """Re-read settings from a scratch environment, restored afterwards."""
    original_env = dict(os.environ)
    reset_settings()
    yield
    os.environ.clear()
    os.environ.update(original_env)
    reset_settings()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)

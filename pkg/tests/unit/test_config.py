"""Unit tests for numerical settings.

Covers defaults, environment overrides, range validation and the
settings singleton.
"""

import os

import pytest
from pydantic import ValidationError

from coherence_lab.core.config import Settings, get_settings, reset_settings


class TestDefaults:
    """Default tolerances and sampling parameters."""

    def test_tolerance_defaults(self) -> None:
        settings = Settings(_env_file=None)
        
        assert settings.TOL == 1e-9
        assert settings.MCS_TOL == 1e-7
        assert settings.EQUALITY_TOL == 1e-7
        assert settings.PHASE_TOL == 1e-9
        assert settings.ZERO_THRESHOLD == 1e-10
        assert settings.JACOBI_TOL == 1e-12

    def test_sampling_defaults(self) -> None:
        settings = Settings(_env_file=None)
        
        assert settings.JACOBI_MAX_SWEEPS == 100
        assert settings.MONTE_CARLO_SAMPLES == 50
        assert settings.SEED == 0
        assert settings.MINIMIZATION_GRID == 20
        assert settings.LOG_LEVEL == "WARNING"


class TestEnvironmentOverrides:
    """Variables carrying the COHERENCE_LAB_ prefix override defaults."""

    def test_tol_from_environment(self, clean_env: None) -> None:
        os.environ["COHERENCE_LAB_TOL"] = "1e-6"
        
        assert Settings(_env_file=None).TOL == 1e-6

    def test_unprefixed_variable_is_ignored(self, clean_env: None) -> None:
        os.environ.pop("COHERENCE_LAB_TOL", None)
        os.environ["TOL"] = "0.5"
        
        assert Settings(_env_file=None).TOL == 1e-9

    @pytest.mark.parametrize(
        ("name", "value"),
        [
            ("COHERENCE_LAB_TOL", "0"),
            ("COHERENCE_LAB_TOL", "-1e-9"),
            ("COHERENCE_LAB_JACOBI_MAX_SWEEPS", "0"),
            ("COHERENCE_LAB_MONTE_CARLO_SAMPLES", "0"),
            ("COHERENCE_LAB_LOG_LEVEL", "CHATTY"),
        ],
    )
    def test_out_of_range_value_is_rejected(
        self, clean_env: None, name: str, value: str
    ) -> None:
        os.environ[name] = value
        
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


class TestSingleton:
    """get_settings caches until reset_settings is called."""

    def test_same_instance_until_reset(self, clean_env: None) -> None:
        first = get_settings()
        
        assert get_settings() is first
        
        os.environ["COHERENCE_LAB_SEED"] = "7"
        reset_settings()
        
        assert get_settings() is not first
        assert get_settings().SEED == 7

"""Library configuration using pydantic-settings."""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical settings loaded from environment variables.
    
    Every variable carries the ``COHERENCE_LAB_`` prefix, e.g.
    ``COHERENCE_LAB_TOL=1e-8`` loosens state and channel validation.
    Out-of-range values raise a ValidationError when settings are loaded.
    """
    
    model_config = SettingsConfigDict(
        env_prefix="COHERENCE_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )
    
    # Validation of states and channels
    TOL: float = Field(default=1e-9, gt=0)
    
    # Maximally coherent state detection (purity and modulus uniformity)
    MCS_TOL: float = Field(default=1e-7, gt=0)
    
    # Super-additivity equality and product-state test
    EQUALITY_TOL: float = Field(default=1e-7, gt=0)
    
    # Phase identities, compared after wrapping to (-pi, pi]
    PHASE_TOL: float = Field(default=1e-9, gt=0)
    
    # Kraus entries below ZERO_THRESHOLD * ||K||_F count as zero
    ZERO_THRESHOLD: float = Field(default=1e-10, gt=0)
    
    # Eigensolver
    JACOBI_TOL: float = Field(default=1e-12, gt=0)
    JACOBI_MAX_SWEEPS: int = Field(default=100, ge=1)
    
    # Sampling
    MONTE_CARLO_SAMPLES: int = Field(default=50, ge=1)
    SEED: int = Field(default=0, ge=0)
    MINIMIZATION_GRID: int = Field(default=20, ge=1)
    
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"


# Singleton settings instance - lazily loaded
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the settings singleton."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next access re-reads the environment."""
    global _settings
    _settings = None

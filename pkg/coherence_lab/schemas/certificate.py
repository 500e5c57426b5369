"""Machine-readable certificate emitted by every CLI command."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer

# Member order matters: bool, then int, then float
Verdict = bool | int | float | str | list[float]


def _round(value: float) -> float:
    """Round to 15 significant digits."""
    return float(f"{value:.15g}")


def _serialize_verdict(value: Verdict) -> Verdict:
    if isinstance(value, bool) or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _round(value)
    return [_round(v) for v in value]


class Certificate(BaseModel):
    """Verdicts of one command, reproducible from its inputs.
    
    Reals are serialized with 15 significant digits, so re-running a
    command on the same inputs with the same seed yields identical bytes.
    """
    
    model_config = ConfigDict(frozen=True)
    
    command: str
    inputs: dict[str, str] = Field(default_factory=dict, description="path -> sha256")
    parameters: dict[str, Verdict] = Field(default_factory=dict)
    verdicts: dict[str, Verdict] = Field(default_factory=dict)
    witnesses: dict[str, list[list[list[float]]]] | None = None
    tol: float
    
    @field_serializer("verdicts", "parameters")
    def serialize_reals(self, values: dict[str, Verdict]) -> dict[str, Any]:
        """Round reals to 15 significant digits."""
        return {key: _serialize_verdict(value) for key, value in values.items()}
    
    @field_serializer("tol")
    def serialize_tol(self, tol: float) -> float:
        return _round(tol)

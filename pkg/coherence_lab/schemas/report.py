"""Pydantic report schemas for coherence and super-additivity analyses."""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CoherenceReport(BaseModel):
    """Relative-entropy coherence of a state with its MCS verdict.
    
    witness_phases holds theta_k of the diagonal unitary
    U = diag(e^{i theta_1}, ..., e^{i theta_d}) with U|psi_d> the state,
    gauge-fixed by theta_1 = 0 and wrapped to [0, 2 pi).
    """
    
    model_config = ConfigDict(frozen=True)
    
    value: float = Field(..., ge=0.0, description="C_RE in bits")
    max_possible: float = Field(..., ge=0.0, description="log2(d)")
    is_mcs: bool
    witness_phases: tuple[float, ...] | None = None
    tol: float = Field(default=1e-9, gt=0.0)
    
    @model_validator(mode="after")
    def check_invariants(self) -> "CoherenceReport":
        """Enforce value <= log2 d and witness presence iff MCS."""
        if self.value > self.max_possible + self.tol:
            raise ValueError(
                f"coherence {self.value} exceeds its maximum {self.max_possible}"
            )
        if self.is_mcs != (self.witness_phases is not None):
            raise ValueError("witness_phases must be present exactly when is_mcs is true")
        return self


class SuperAdditivityReport(BaseModel):
    """Both sides of C_RE(rho_AB) >= C_RE(rho_A) + C_RE(rho_B)."""
    
    model_config = ConfigDict(frozen=True)
    
    c_ab: float
    c_a: float
    c_b: float
    gap: float
    equality: bool
    is_product: bool
    product_distance: float = Field(..., ge=0.0, description="||rho - rho_A (x) rho_B||_F")
    tol: float = Field(default=1e-7, gt=0.0)
    
    @model_validator(mode="after")
    def check_invariants(self) -> "SuperAdditivityReport":
        """Gap is non-negative and the verdicts follow their tolerances."""
        if self.gap < -self.tol:
            raise ValueError(f"super-additivity violated: gap {self.gap} < -{self.tol}")
        if self.equality != (abs(self.gap) <= self.tol):
            raise ValueError("equality must hold exactly when |gap| <= tol")
        if self.is_product != (self.product_distance <= self.tol):
            raise ValueError("is_product must hold exactly when product_distance <= tol")
        return self


class CfInput(BaseModel):
    """Probability vector x on four outcomes, the domain of C_f."""
    
    model_config = ConfigDict(frozen=True)
    
    x: tuple[float, float, float, float]
    tol: float = Field(default=1e-9, gt=0.0)
    
    @model_validator(mode="after")
    def check_simplex(self) -> "CfInput":
        if min(self.x) < -self.tol:
            raise ValueError(f"entries must be non-negative, got {self.x}")
        if abs(sum(self.x) - 1.0) > self.tol:
            raise ValueError(f"entries must sum to 1, got {sum(self.x)!r}")
        return self

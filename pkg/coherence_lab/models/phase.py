"""Phase tables theta_ij generating bipartite pure states."""

import math
from dataclasses import dataclass

import numpy as np

from coherence_lab.models.matrix import RealVector


def wrap_phase(theta: np.ndarray | float) -> np.ndarray:
    """Map angles to (-pi, pi]."""
    wrapped = np.mod(np.asarray(theta, dtype=np.float64) + math.pi, 2.0 * math.pi) - math.pi
    return np.where(wrapped == -math.pi, math.pi, wrapped)


@dataclass(frozen=True)
class PhaseMatrix:
    """Real d_a x d_b table of phases in radians.
    
    Entry (i, j) is the phase of basis vector |i>|j>, flattened to
    index i * d_b + j.
    """
    
    theta: RealVector
    
    @property
    def d_a(self) -> int:
        return int(self.theta.shape[0])
    
    @property
    def d_b(self) -> int:
        return int(self.theta.shape[1])
    
    @property
    def is_square(self) -> bool:
        return self.d_a == self.d_b
    
    def flatten(self) -> RealVector:
        """Phases in composite-basis order."""
        return self.theta.reshape(-1).copy()
    
    def normalized(self) -> "PhaseMatrix":
        """Gauge-fixed copy with theta_11 = 0 and entries in [0, 2 pi)."""
        shifted = np.mod(self.theta - self.theta[0, 0], 2.0 * math.pi)
        shifted[np.isclose(shifted, 2.0 * math.pi, rtol=0.0, atol=1e-12)] = 0.0
        out = np.array(shifted, dtype=np.float64)
        out.flags.writeable = False
        return PhaseMatrix(theta=out)

"""Quantum state value types."""

from dataclasses import dataclass, field

import numpy as np

from coherence_lab.models.matrix import ComplexMatrix, ComplexVector, RealVector
from coherence_lab.models.spectrum import Spectrum


@dataclass(frozen=True)
class DensityMatrix:
    """Validated quantum state with its spectrum computed at construction.
    
    Instances are produced by ``services.states.density_matrix``, which
    checks Hermiticity, positivity and unit trace.
    
    Attributes:
        mat: d x d Hermitian, positive semidefinite, trace-one matrix
        spectrum: Eigendecomposition of mat
        tol: Tolerance the state was validated with
    """
    
    mat: ComplexMatrix
    spectrum: Spectrum
    tol: float = 1e-9
    
    @property
    def dim(self) -> int:
        return int(self.mat.shape[0])
    
    @property
    def purity(self) -> float:
        """Tr(rho^2)."""
        return float(np.sum(self.spectrum.eigenvalues**2))
    
    def diagonal(self) -> RealVector:
        return np.real(np.diagonal(self.mat)).copy()


@dataclass(frozen=True)
class PureState:
    """Unit vector sum_k alpha_k |k>."""
    
    amplitudes: ComplexVector
    
    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])
    
    def projector(self) -> ComplexMatrix:
        """Return |phi><phi|."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True)
class IncoherentState:
    """Probability vector of a state diagonal in the reference basis."""
    
    probs: RealVector
    
    @property
    def dim(self) -> int:
        return int(self.probs.shape[0])


@dataclass(frozen=True)
class Ensemble:
    """Weighted family {p_n, rho_n} of equal-dimension states."""
    
    weights: RealVector
    members: tuple[DensityMatrix, ...] = field(default_factory=tuple)
    
    @property
    def dim(self) -> int:
        return self.members[0].dim

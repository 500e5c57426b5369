"""Eigendecomposition result of a Hermitian matrix."""

from dataclasses import dataclass

import numpy as np

from coherence_lab.models.matrix import ComplexMatrix, RealVector


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (descending) with orthonormal eigenvectors as columns.
    
    Attributes:
        eigenvalues: Real eigenvalues sorted in descending order
        eigenvectors: Unitary matrix whose k-th column belongs to eigenvalues[k]
    """
    
    eigenvalues: RealVector
    eigenvectors: ComplexMatrix
    
    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])
    
    def reconstruct(self) -> ComplexMatrix:
        """Return V diag(lambda) V^dagger."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T
    
    def clipped(self, tol: float) -> RealVector:
        """Eigenvalues with entries in [-tol, 0) set to zero."""
        values = np.array(self.eigenvalues, copy=True)
        values[(values < 0.0) & (values >= -tol)] = 0.0
        return values

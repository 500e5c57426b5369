"""Kraus channels and MCS-preservation verdicts."""

from dataclasses import dataclass, field

import numpy as np

from coherence_lab.models.matrix import ComplexMatrix, ComplexVector, RealVector
from coherence_lab.models.state import DensityMatrix


@dataclass(frozen=True)
class KrausChannel:
    """Trace-preserving map rho -> sum_n K_n rho K_n^dagger.
    
    Instances are produced by ``services.channels.kraus_channel``, which
    checks the completeness relation sum_n K_n^dagger K_n = I, or by the
    seeded generators in ``services.sampling``, complete by construction.
    """
    
    kraus: tuple[ComplexMatrix, ...]
    d: int
    
    def __len__(self) -> int:
        return len(self.kraus)


@dataclass(frozen=True)
class PermScaledFactor:
    """Normal form K = scale * diag(phases) * Pi of a Kraus operator.
    
    Attributes:
        scale: Complex factor a_n (the entry of column 0)
        perm: perm[c] is the row holding column c's nonzero entry
        phases: Unimodular diagonal, indexed by row, equal to 1 on row perm[0]
    """
    
    scale: complex
    perm: tuple[int, ...]
    phases: ComplexVector
    
    def permutation_matrix(self) -> ComplexMatrix:
        d = len(self.perm)
        pi = np.zeros((d, d), dtype=np.complex128)
        pi[list(self.perm), list(range(d))] = 1.0
        return pi
    
    def matrix(self) -> ComplexMatrix:
        """Reconstruct scale * diag(phases) @ Pi."""
        return self.scale * (self.phases[:, None] * self.permutation_matrix())


@dataclass(frozen=True)
class IncoherenceReport:
    """Structural incoherence verdict.
    
    Attributes:
        incoherent: Every Kraus column has at most one nonzero entry
        witnesses: (operator index, column) pairs with two or more nonzeros
    """
    
    incoherent: bool
    witnesses: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    
    def __bool__(self) -> bool:
        return self.incoherent


@dataclass(frozen=True)
class MCSWitness:
    """An MCS whose image under the channel is no longer maximally coherent."""
    
    input_phases: RealVector
    input_state: DensityMatrix
    output_state: DensityMatrix
    coherence_drop: float


@dataclass(frozen=True)
class ChannelClassification:
    """Result of testing whether an incoherent channel preserves MCSs.
    
    Attributes:
        incoherent: Structural incoherence verdict
        unital: sum_n K_n K_n^dagger = I within tolerance
        preserves_mcs: The channel acts as rho -> (D Pi) rho (D Pi)^dagger
        factors: Normal forms of the retained Kraus operators, when every
            one factorises
        witness: Present when the channel is incoherent but not preserving
        samples: Number of random MCSs pushed through the channel
    """
    
    incoherent: bool
    unital: bool
    preserves_mcs: bool
    factors: tuple[PermScaledFactor, ...] | None = None
    witness: MCSWitness | None = None
    samples: int = 0

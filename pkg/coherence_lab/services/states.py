"""Validated quantum states, dephasing, entropies and reduced states.

All logarithms are base 2, so entropies are in bits and the maximally
mixed state of dimension d has entropy log2(d).
"""

import logging
import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from coherence_lab.core.config import get_settings
from coherence_lab.core.exceptions import (
    DimensionMismatchError,
    NonFiniteError,
    NotPositiveError,
    TraceError,
    ValidationError,
)
from coherence_lab.models.matrix import as_complex_matrix, frozen
from coherence_lab.models.phase import PhaseMatrix
from coherence_lab.models.state import DensityMatrix, Ensemble, IncoherentState, PureState
from coherence_lab.services.linalg import hermitian_eig, partial_trace

logger = logging.getLogger(__name__)


def density_matrix(data: npt.ArrayLike, tol: float | None = None) -> DensityMatrix:
    """Validate ``data`` as a quantum state and cache its spectrum.
    
    Args:
        data: Square complex matrix
        tol: Validation tolerance (settings TOL by default)
        
    Returns:
        DensityMatrix: Immutable state with eigendecomposition attached
        
    Raises:
        NotHermitianError: If the matrix is not Hermitian within tol
        TraceError: If |Tr(rho) - 1| > tol
        NotPositiveError: If an eigenvalue lies below -tol
    """
    tol = get_settings().TOL if tol is None else tol
    mat = as_complex_matrix(data, square=True)
    spectrum = hermitian_eig(mat, tol)
    
    trace = float(np.real(np.trace(mat)))
    if abs(trace - 1.0) > tol:
        raise TraceError(trace, tol)
    smallest = float(spectrum.eigenvalues[-1])
    if smallest < -tol:
        raise NotPositiveError(smallest, tol)
    
    hermitian = frozen(0.5 * (mat + mat.conj().T))
    return DensityMatrix(mat=hermitian, spectrum=spectrum, tol=tol)


def pure_state(amplitudes: npt.ArrayLike, tol: float | None = None) -> PureState:
    """Validate a unit-norm amplitude vector."""
    tol = get_settings().TOL if tol is None else tol
    vec = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if vec.size == 0 or not np.all(np.isfinite(vec)):
        raise NonFiniteError("amplitudes must be a non-empty vector of finite numbers")
    norm_sq = float(np.sum(np.abs(vec) ** 2))
    if abs(norm_sq - 1.0) > tol:
        raise ValidationError(f"state vector must have unit norm: sum |alpha_k|^2 = {norm_sq!r}")
    return PureState(amplitudes=frozen(vec))


def incoherent_state(probs: npt.ArrayLike, tol: float | None = None) -> IncoherentState:
    """Validate a probability vector."""
    tol = get_settings().TOL if tol is None else tol
    p = np.asarray(probs, dtype=np.float64).reshape(-1)
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise NonFiniteError("probabilities must be a non-empty vector of finite numbers")
    if float(np.min(p)) < -tol:
        raise ValidationError(f"probabilities must be non-negative, got min {float(np.min(p))!r}")
    total = float(np.sum(p))
    if abs(total - 1.0) > tol:
        raise TraceError(total, tol)
    return IncoherentState(probs=frozen(np.clip(p, 0.0, None)))


def ensemble(
    weights: npt.ArrayLike,
    members: Sequence[DensityMatrix],
    tol: float | None = None,
) -> Ensemble:
    """Validate an ensemble {p_n, rho_n}."""
    w = incoherent_state(weights, tol).probs
    if len(members) != w.size:
        raise DimensionMismatchError(f"{w.size} weights for {len(members)} members")
    dims = {m.dim for m in members}
    if len(dims) != 1:
        raise DimensionMismatchError(f"ensemble members have mixed dimensions {sorted(dims)}")
    return Ensemble(weights=w, members=tuple(members))


def from_pure(psi: PureState, tol: float | None = None) -> DensityMatrix:
    """Density matrix |psi><psi|."""
    return density_matrix(psi.projector(), tol)


def as_density_matrix(state: IncoherentState, tol: float | None = None) -> DensityMatrix:
    """Embed a probability vector as the diagonal state sum_k p_k |k><k|."""
    return density_matrix(np.diag(state.probs.astype(np.complex128)), tol)


def maximally_mixed(d: int) -> DensityMatrix:
    """The state I/d."""
    return density_matrix(np.eye(d, dtype=np.complex128) / d)


def mix(ens: Ensemble) -> DensityMatrix:
    """Average state sum_n p_n rho_n."""
    total = sum(
        (p * m.mat for p, m in zip(ens.weights, ens.members, strict=True)),
        start=np.zeros((ens.dim, ens.dim), dtype=np.complex128),
    )
    return density_matrix(total, max(m.tol for m in ens.members))


def dephase(rho: DensityMatrix) -> IncoherentState:
    """Diagonal of rho as a probability vector (rho_diag)."""
    return IncoherentState(probs=frozen(np.clip(rho.diagonal(), 0.0, None)))


def shannon_entropy(probs: npt.ArrayLike) -> float:
    """-sum p log2 p with 0 log 0 := 0."""
    p = np.asarray(probs, dtype=np.float64)
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p))) if p.size else 0.0


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy S(rho) in bits, clipped into [0, log2 d].
    
    Eigenvalues in [-tol, 0) are clipped to zero before the logarithm.
    """
    values = rho.spectrum.clipped(rho.tol)
    clipped = int(np.sum(values != rho.spectrum.eigenvalues))
    if clipped:
        logger.debug("clipped %d tiny negative eigenvalues", clipped)
    entropy = shannon_entropy(values)
    return min(max(entropy, 0.0), math.log2(rho.dim))


def relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Relative entropy S(rho || sigma) = Tr(rho log2 rho - rho log2 sigma).
    
    Evaluated in the eigenbasis of sigma. Returns ``math.inf`` when the
    support of rho is not contained in the support of sigma.
    
    Raises:
        DimensionMismatchError: If the states differ in dimension
    """
    if rho.dim != sigma.dim:
        raise DimensionMismatchError(f"dimensions differ: {rho.dim} vs {sigma.dim}")
    tol = max(rho.tol, sigma.tol)
    
    mu = sigma.spectrum.clipped(tol)
    vecs = sigma.spectrum.eigenvectors
    populations = np.real(np.einsum("ik,ij,jk->k", vecs.conj(), rho.mat, vecs))
    
    outside = mu <= tol
    if np.any(populations[outside] > tol):
        return math.inf
    cross = float(np.sum(populations[~outside] * np.log2(mu[~outside])))
    return max(-von_neumann_entropy(rho) - cross, 0.0)


def reduced_states(
    rho: DensityMatrix,
    d_a: int,
    d_b: int,
) -> tuple[DensityMatrix, DensityMatrix]:
    """Reduced states (rho_A, rho_B) of a bipartite state.
    
    Raises:
        DimensionMismatchError: If rho.dim != d_a * d_b
    """
    rho_a = partial_trace(rho.mat, d_a, d_b, keep="A")
    rho_b = partial_trace(rho.mat, d_a, d_b, keep="B")
    return density_matrix(rho_a, rho.tol), density_matrix(rho_b, rho.tol)


def pure_from_phases(phases: PhaseMatrix | npt.ArrayLike) -> PureState:
    """Equal-weight superposition sum_k e^{i theta_k} |k> / sqrt(d).
    
    A PhaseMatrix is flattened in composite-basis order i * d_b + j.
    """
    if isinstance(phases, PhaseMatrix):
        theta = phases.flatten()
    else:
        theta = np.asarray(phases, dtype=np.float64)
    theta = theta.reshape(-1)
    if theta.size == 0 or not np.all(np.isfinite(theta)):
        raise NonFiniteError("phases must be a non-empty vector of finite numbers")
    amplitudes = np.exp(1j * theta) / math.sqrt(theta.size)
    return PureState(amplitudes=frozen(amplitudes.astype(np.complex128)))

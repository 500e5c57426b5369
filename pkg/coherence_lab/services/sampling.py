"""Seeded random generators for states, unitaries and channels.

Every function takes an explicit ``numpy.random.Generator`` so runs are
reproducible from a single seed.
"""

import math

import numpy as np

from coherence_lab.models.channel import KrausChannel
from coherence_lab.models.matrix import ComplexMatrix, RealVector, as_complex_matrix
from coherence_lab.models.state import DensityMatrix, Ensemble, PureState
from coherence_lab.services.states import density_matrix, ensemble, pure_state


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> ComplexMatrix:
    """Matrix of i.i.d. standard complex Gaussian entries."""
    real = rng.standard_normal((rows, cols))
    imag = rng.standard_normal((rows, cols))
    return (real + 1j * imag) / math.sqrt(2.0)


def random_unitary(rng: np.random.Generator, d: int) -> ComplexMatrix:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    q, r = np.linalg.qr(ginibre(rng, d, d))
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_phase_vector(rng: np.random.Generator, d: int) -> RealVector:
    """Phases drawn uniformly from [0, 2 pi)."""
    return rng.uniform(0.0, 2.0 * math.pi, size=d)


def random_diagonal_unitary(rng: np.random.Generator, d: int) -> ComplexMatrix:
    return np.diag(np.exp(1j * random_phase_vector(rng, d)))


def random_permutation(rng: np.random.Generator, d: int) -> ComplexMatrix:
    """Permutation matrix sending column c to row perm[c]."""
    perm = rng.permutation(d)
    pi = np.zeros((d, d), dtype=np.complex128)
    pi[perm, np.arange(d)] = 1.0
    return pi


def random_pure_state(rng: np.random.Generator, d: int) -> PureState:
    vec = ginibre(rng, d, 1).reshape(-1)
    return pure_state(vec / np.linalg.norm(vec))


def random_density_matrix(
    rng: np.random.Generator,
    d: int,
    rank: int | None = None,
) -> DensityMatrix:
    """Random state G G^dagger / Tr(G G^dagger) with G a d x rank Ginibre matrix."""
    g = ginibre(rng, d, d if rank is None else rank)
    rho = g @ g.conj().T
    return density_matrix(rho / np.real(np.trace(rho)))


def random_incoherent_state(rng: np.random.Generator, d: int) -> DensityMatrix:
    probs = rng.dirichlet(np.ones(d))
    return density_matrix(np.diag(probs.astype(np.complex128)))


def random_ensemble(
    rng: np.random.Generator,
    d: int,
    size: int,
) -> Ensemble:
    """Ensemble of random mixed states with Dirichlet weights."""
    members = [random_density_matrix(rng, d) for _ in range(size)]
    return ensemble(rng.dirichlet(np.ones(size)), members)


def random_incoherent_channel(
    rng: np.random.Generator,
    d: int,
    n_terms: int = 3,
    sparsity: float = 0.3,
) -> KrausChannel:
    """Incoherent channel built from weighted partial permutations.
    
    Each K_n = sum_c w_nc |perm_n(c)><c| with some weights zeroed, so every
    column holds at most one nonzero entry and K_n^dagger K_n is diagonal;
    columns are then normalised across n. The family contains dephasing,
    permutations and amplitude damping.
    """
    weights = ginibre(rng, n_terms, d)
    mask = rng.uniform(size=(n_terms, d)) < sparsity
    mask[rng.integers(n_terms, size=d), np.arange(d)] = False
    weights[mask] = 0.0
    weights /= np.linalg.norm(weights, axis=0, keepdims=True)
    
    operators = []
    for n in range(n_terms):
        perm = rng.permutation(d)
        k = np.zeros((d, d), dtype=np.complex128)
        k[perm, np.arange(d)] = weights[n]
        operators.append(k)
    return _channel(operators)


def random_perm_diag_channel(rng: np.random.Generator, d: int) -> KrausChannel:
    """Single-term channel {e^{i phi} D Pi}."""
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    return _channel([phase * random_diagonal_unitary(rng, d) @ random_permutation(rng, d)])


def random_unital_mixture_channel(
    rng: np.random.Generator,
    d: int,
    n_terms: int = 2,
) -> KrausChannel:
    """Channel {a_n D_n Pi_n} with at least two non-proportional terms.
    
    Weights |a_n|^2 are drawn from [0.2, 1] before normalisation so that no
    term is negligible.
    """
    if n_terms < 2:
        raise ValueError("a mixture needs at least two terms")
    weights = rng.uniform(0.2, 1.0, size=n_terms)
    weights /= weights.sum()
    terms = [random_diagonal_unitary(rng, d) @ random_permutation(rng, d) for _ in range(n_terms)]
    # Regenerate the second term while it is proportional to the first
    while _proportional(terms[0], terms[1]):
        terms[1] = random_diagonal_unitary(rng, d) @ random_permutation(rng, d)
    phases = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, size=n_terms))
    return _channel(
        [math.sqrt(w) * p * t for w, p, t in zip(weights, phases, terms, strict=True)]
    )


def _channel(operators: list[ComplexMatrix]) -> KrausChannel:
    # Complete by construction; services.channels imports this module
    mats = tuple(as_complex_matrix(k, square=True) for k in operators)
    return KrausChannel(kraus=mats, d=mats[0].shape[0])


def _proportional(a: ComplexMatrix, b: ComplexMatrix, tol: float = 1e-6) -> bool:
    overlap = abs(np.vdot(a, b))
    return abs(overlap - np.linalg.norm(a) * np.linalg.norm(b)) <= tol

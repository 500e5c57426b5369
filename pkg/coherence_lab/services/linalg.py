"""Dense complex linear algebra: Kronecker product, partial trace and a
cyclic Jacobi eigensolver for Hermitian matrices.

The eigensolver annihilates one off-diagonal pair (p, q) at a time with a
2x2 unitary rotation. The pair is first made real by a diagonal phase,
then rotated by the classical real Jacobi angle:

    G = [[c,              s            ],
         [-s e^{-i phi},  c e^{-i phi} ]]     with a_pq = |a_pq| e^{i phi}

and A <- G^dagger A G, V <- V G. Sweeps continue until the off-diagonal
Frobenius norm drops to ``tol * ||A||_F``.
"""

import logging
import math
from typing import Literal

import numpy as np
import numpy.typing as npt

from coherence_lab.core.config import get_settings
from coherence_lab.core.exceptions import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
)
from coherence_lab.models.matrix import ComplexMatrix, as_complex_matrix, frozen
from coherence_lab.models.spectrum import Spectrum

logger = logging.getLogger(__name__)


def frobenius(a: npt.ArrayLike) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a), ord="fro"))


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return a.conj().T


def hermiticity_residual(a: ComplexMatrix) -> float:
    """Return ||A - A^dagger||_F."""
    return frobenius(a - dagger(a))


def _off_norm(a: ComplexMatrix) -> float:
    # Summed over the off-diagonal entries themselves; ||A||^2 - ||diag||^2 cancels
    return frobenius(a - np.diag(np.diagonal(a)))


def _rotate(a: ComplexMatrix, v: ComplexMatrix, p: int, q: int) -> None:
    apq = a[p, q]
    modulus = abs(apq)
    diff = float(a[q, q].real - a[p, p].real)
    if modulus <= 1e-30 * abs(diff):
        # Rotation angle is below working precision
        a[p, q] = 0.0
        a[q, p] = 0.0
        return
    phase = apq / modulus
    tau = diff / (2.0 * modulus)
    if tau == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
    c = 1.0 / math.hypot(t, 1.0)
    s = t * c
    g10 = -s * phase.conjugate()
    g11 = c * phase.conjugate()
    
    # Columns: A <- A G
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = col_p * c + col_q * g10
    a[:, q] = col_p * s + col_q * g11
    # Rows: A <- G^dagger A
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = row_p * c + row_q * g10.conjugate()
    a[q, :] = row_p * s + row_q * g11.conjugate()
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    
    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = vec_p * c + vec_q * g10
    v[:, q] = vec_p * s + vec_q * g11


def hermitian_eig(
    a: npt.ArrayLike,
    tol: float | None = None,
    *,
    max_sweeps: int | None = None,
) -> Spectrum:
    """Eigendecompose a Hermitian matrix with cyclic Jacobi rotations.
    
    Args:
        a: Square complex matrix
        tol: Hermiticity tolerance, relative to max(1, ||a||_F)
        max_sweeps: Sweep cap (settings JACOBI_MAX_SWEEPS by default)
        
    Returns:
        Spectrum: eigenvalues sorted descending, orthonormal eigenvectors
        
    Raises:
        NotHermitianError: If ||a - a^dagger||_F > tol * max(1, ||a||_F)
        NoConvergenceError: If the sweep cap is reached
    """
    settings = get_settings()
    tol = settings.TOL if tol is None else tol
    max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps
    
    mat = as_complex_matrix(a, square=True)
    norm = frobenius(mat)
    residual = hermiticity_residual(mat)
    if residual > tol * max(1.0, norm):
        raise NotHermitianError(residual, tol * max(1.0, norm))
    
    work = 0.5 * (mat + dagger(mat))
    n = work.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    target = settings.JACOBI_TOL * norm
    
    sweeps = 0
    off = _off_norm(work)
    while off > target:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(sweeps, off)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(work[p, q]) > 0.0:
                    _rotate(work, vecs, p, q)
        sweeps += 1
        off = _off_norm(work)
    logger.debug("Jacobi converged in %d sweeps (n=%d, off=%.3e)", sweeps, n, off)
    
    diag = np.diagonal(work)
    imag_residual = float(np.max(np.abs(diag.imag))) if n else 0.0
    if imag_residual > tol * max(1.0, norm):
        raise NotHermitianError(imag_residual, tol * max(1.0, norm))
    
    values = diag.real.astype(np.float64)
    order = np.argsort(-values, kind="stable")
    return Spectrum(eigenvalues=frozen(values[order]), eigenvectors=frozen(vecs[:, order]))


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """Kronecker product; the row index of a is the major index."""
    return frozen(np.kron(as_complex_matrix(a), as_complex_matrix(b)))


def partial_trace(
    m: npt.ArrayLike,
    d_a: int,
    d_b: int,
    keep: Literal["A", "B"] = "A",
) -> ComplexMatrix:
    """Trace out one factor of a (d_a * d_b)-dimensional operator.
    
    The composite basis is ordered |i, j> -> i * d_b + j.
    
    Raises:
        DimensionMismatchError: If m is not (d_a*d_b) x (d_a*d_b) or the
            factor dimensions are not positive
    """
    mat = as_complex_matrix(m)
    if d_a < 1 or d_b < 1 or mat.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatchError(
            f"cannot split a {mat.shape[0]}x{mat.shape[1]} matrix into {d_a} x {d_b} factors"
        )
    tensor = mat.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        reduced = np.einsum("ijkj->ik", tensor)
    elif keep == "B":
        reduced = np.einsum("ijil->jl", tensor)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return frozen(reduced)

"""Super-additivity of the relative entropy of coherence on H_A (x) H_B.

For a bipartite state, C_RE(rho_AB) >= C_RE(rho_A) + C_RE(rho_B). For a
pure MCS built from phases theta_ij, equality holds exactly when both
reduced states are MCSs, which happens exactly when the phase table
separates as theta_ij = a_i + b_j (mod 2 pi), i.e. when rho_AB is the
product of its reduced states.

The composite basis is ordered |i, j> -> i * d_b + j throughout.
"""

import itertools
import logging
import math

import numpy as np
import numpy.typing as npt

from coherence_lab.core.config import get_settings
from coherence_lab.core.exceptions import (
    NonFiniteError,
    NotSquareError,
    OutOfRangeError,
    ValidationError,
)
from coherence_lab.models.matrix import ComplexMatrix, frozen
from coherence_lab.models.phase import PhaseMatrix, wrap_phase
from coherence_lab.models.state import DensityMatrix
from coherence_lab.schemas.report import SuperAdditivityReport
from coherence_lab.services.coherence import c_re
from coherence_lab.services.linalg import frobenius, kron
from coherence_lab.services.states import from_pure, pure_from_phases, reduced_states

logger = logging.getLogger(__name__)


def phase_matrix(theta: npt.ArrayLike) -> PhaseMatrix:
    """Validate a d_a x d_b table of finite phases."""
    table = np.asarray(theta, dtype=np.float64)
    if table.ndim != 2 or table.size == 0:
        raise ValidationError(f"phase table must be a non-empty 2-D array, got shape {table.shape}")
    if not np.all(np.isfinite(table)):
        raise NonFiniteError("phase table entries must be finite")
    return PhaseMatrix(theta=frozen(table))


def superadditivity_report(
    rho: DensityMatrix,
    d_a: int,
    d_b: int,
    tol: float | None = None,
) -> SuperAdditivityReport:
    """Compare C_RE(rho_AB) with C_RE(rho_A) + C_RE(rho_B).
    
    Args:
        rho: Bipartite state of dimension d_a * d_b
        d_a: Dimension of subsystem A
        d_b: Dimension of subsystem B
        tol: Equality and product tolerance (settings EQUALITY_TOL by default)
        
    Raises:
        DimensionMismatchError: If rho.dim != d_a * d_b
    """
    tol = get_settings().EQUALITY_TOL if tol is None else tol
    rho_a, rho_b = reduced_states(rho, d_a, d_b)
    c_ab, c_a, c_b = c_re(rho), c_re(rho_a), c_re(rho_b)
    gap = c_ab - c_a - c_b
    distance = frobenius(rho.mat - kron(rho_a.mat, rho_b.mat))
    return SuperAdditivityReport(
        c_ab=c_ab,
        c_a=c_a,
        c_b=c_b,
        gap=gap,
        equality=abs(gap) <= tol,
        is_product=distance <= tol,
        product_distance=distance,
        tol=tol,
    )


def phases_consistent(theta: PhaseMatrix, tol: float | None = None) -> bool:
    """Whether theta_ij - theta_it = theta_i'j - theta_i't for all i, i', j, t.
    
    The column-difference form theta_ij - theta_sj = theta_ij' - theta_sj'
    is checked as well; both compare after wrapping to (-pi, pi].
    """
    tol = get_settings().PHASE_TOL if tol is None else tol
    t = theta.theta
    worst = 0.0
    for i, i2 in itertools.combinations(range(theta.d_a), 2):
        row_diff = t[i, :, None] - t[i, None, :] - t[i2, :, None] + t[i2, None, :]
        worst = max(worst, float(np.max(np.abs(wrap_phase(row_diff)))))
    for j, j2 in itertools.combinations(range(theta.d_b), 2):
        col_diff = t[:, None, j] - t[None, :, j] - t[:, None, j2] + t[None, :, j2]
        worst = max(worst, float(np.max(np.abs(wrap_phase(col_diff)))))
    return worst <= tol


def reduced_states_from_phases(theta: PhaseMatrix) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Closed-form reduced states of the pure state built from theta.
    
    rho_A[i, s] = (1/d) sum_j e^{i(theta_ij - theta_sj)} and
    rho_B[j, t] = (1/d) sum_i e^{i(theta_ij - theta_it)}.
    """
    d = theta.d_a * theta.d_b
    u = np.exp(1j * theta.theta)
    rho_a = (u @ u.conj().T) / d
    rho_b = (u.T @ u.conj()) / d
    return frozen(rho_a), frozen(rho_b)


def result2_check(
    theta: PhaseMatrix,
    *,
    equality_tol: float | None = None,
    phase_tol: float | None = None,
) -> tuple[bool, bool, bool]:
    """Check equality <=> product <=> separable phases for a square table.
    
    The three predicates coincide away from their tolerances. Close to a
    separable table the gap shrinks like eps^2 log(1/eps) while the product
    distance shrinks like eps, so a narrow band exists where equality holds
    at equality_tol and the other two do not; the triple is returned as is.
    
    Returns:
        (equality, is_product, phases_consistent) for the pure MCS built
        from theta
        
    Raises:
        NotSquareError: If d_a != d_b
    """
    if not theta.is_square:
        raise NotSquareError(f"phase table must be square, got {theta.d_a}x{theta.d_b}")
    rho = from_pure(pure_from_phases(theta))
    report = superadditivity_report(rho, theta.d_a, theta.d_b, equality_tol)
    consistent = phases_consistent(theta, phase_tol)
    verdict = (report.equality, report.is_product, consistent)
    if len(set(verdict)) != 1:
        logger.debug(
            "verdicts %s inside the tolerance band (gap %.3e, product distance %.3e)",
            verdict, report.gap, report.product_distance,
        )
    return verdict


def counterexample_phases(theta: float) -> PhaseMatrix:
    """Phases (k-1) theta on the 2 x 3 system, k = (i-1) * 3 + j."""
    k = np.arange(6, dtype=np.float64).reshape(2, 3)
    return phase_matrix(k * theta)


def counterexample_23(theta: float) -> tuple[DensityMatrix, SuperAdditivityReport]:
    """The 2 x 3 state sum_k e^{i(k-1) theta} |k> / sqrt(6) and its report.
    
    Its phases split as 3(i-1) theta + (j-1) theta, so the state is the
    product of the two reduced MCSs for every theta: the report carries
    gap 0 and is_product true.
    
    Raises:
        OutOfRangeError: If theta is not in the open interval (0, 2 pi)
    """
    if not (0.0 < theta < 2.0 * math.pi) or not math.isfinite(theta):
        raise OutOfRangeError(f"theta must lie in (0, 2 pi), got {theta!r}")
    rho = from_pure(pure_from_phases(counterexample_phases(theta)))
    return rho, superadditivity_report(rho, 2, 3)


def max_entangled_phases(d: int) -> PhaseMatrix:
    """Discrete Fourier phases theta_ij = -2 pi (i-1)(j-1) / d.
    
    Each row difference sums a full geometric series of d-th roots of
    unity, so sum_j e^{i(theta_ij - theta_sj)} = 0 whenever i != s.
    """
    if d < 2:
        raise OutOfRangeError(f"d must be at least 2, got {d}")
    idx = np.arange(d, dtype=np.float64)
    return phase_matrix(-2.0 * math.pi * np.outer(idx, idx) / d)


def make_mcs_max_entangled(d: int) -> DensityMatrix:
    """A pure state on d x d that is both maximally coherent and maximally entangled."""
    return from_pure(pure_from_phases(max_entangled_phases(d)))


def is_maximally_entangled(
    rho: DensityMatrix,
    d_a: int,
    d_b: int,
    tol: float | None = None,
) -> bool:
    """Pure state with ||rho_A - I/d_a||_F <= tol."""
    tol = get_settings().TOL if tol is None else tol
    if float(rho.spectrum.eigenvalues[0]) < 1.0 - tol:
        return False
    rho_a, _ = reduced_states(rho, d_a, d_b)
    return frobenius(rho_a.mat - np.eye(d_a) / d_a) <= tol

"""Coherence measures and maximally coherent states (MCS).

A state is maximally coherent for the relative entropy of coherence
exactly when it is U|psi_d><psi_d|U^dagger, with |psi_d> the uniform
superposition and U a diagonal unitary. There is no mixed MCS.
"""

import itertools
import logging
import math
from collections.abc import Iterator, Sequence

import numpy as np
import numpy.typing as npt

from coherence_lab.core.config import get_settings
from coherence_lab.core.exceptions import DimensionMismatchError, ValidationError
from coherence_lab.models.state import DensityMatrix, PureState
from coherence_lab.schemas.report import CfInput, CoherenceReport
from coherence_lab.services.states import (
    as_density_matrix,
    dephase,
    from_pure,
    incoherent_state,
    pure_from_phases,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)

logger = logging.getLogger(__name__)

# Entries of a C_f argument below this are treated as exact zeros
CF_ZERO = 1e-12

# Coordinate descent stops once the transfer step falls below this
_MIN_STEP = 1e-13


def c_re(rho: DensityMatrix) -> float:
    """Relative entropy of coherence via S(rho_diag) - S(rho), in bits."""
    value = shannon_entropy(dephase(rho).probs) - von_neumann_entropy(rho)
    return min(max(value, 0.0), math.log2(rho.dim))


def _simplex_grid(d: int, resolution: int) -> Iterator[np.ndarray]:
    """All probability vectors with entries in multiples of 1/resolution."""
    for cuts in itertools.combinations(range(resolution + d - 1), d - 1):
        bounds = (-1, *cuts, resolution + d - 1)
        counts = [bounds[k + 1] - bounds[k] - 1 for k in range(d)]
        yield np.asarray(counts, dtype=np.float64) / resolution


def c_re_via_minimization(rho: DensityMatrix, grid: int | None = None) -> float:
    """min over incoherent sigma of S(rho || sigma), found numerically.
    
    A coarse simplex grid picks the starting point; projected coordinate
    descent then moves probability mass between pairs of outcomes with a
    halving step. Intended as an independent check of ``c_re`` at small d.
    
    Args:
        rho: State to evaluate
        grid: Simplex grid resolution (settings MINIMIZATION_GRID by default)
    """
    grid = get_settings().MINIMIZATION_GRID if grid is None else grid
    d = rho.dim
    if d == 1:
        return 0.0
    
    def cost(p: np.ndarray) -> float:
        return relative_entropy(rho, as_density_matrix(incoherent_state(p, rho.tol)))
    
    best_p = np.full(d, 1.0 / d)
    best = cost(best_p)
    for p in _simplex_grid(d, grid):
        value = cost(p)
        if value < best:
            best, best_p = value, p
    
    step = 1.0 / grid
    evaluations = 0
    while step > _MIN_STEP:
        improved = True
        while improved:
            improved = False
            for i, j in itertools.permutations(range(d), 2):
                if best_p[j] < step:
                    continue
                trial = best_p.copy()
                trial[i] += step
                trial[j] = max(trial[j] - step, 0.0)
                value = cost(trial)
                evaluations += 1
                if value < best:
                    best, best_p = value, trial
                    improved = True
        step /= 2.0
    logger.debug("minimisation finished after %d descent evaluations", evaluations)
    return best


def c_l1(rho: DensityMatrix) -> float:
    """l1 coherence: sum of moduli of the off-diagonal entries."""
    moduli = np.abs(rho.mat)
    return float(np.sum(moduli) - np.sum(np.diagonal(moduli)))


def is_mcs(rho: DensityMatrix, mcs_tol: float | None = None) -> CoherenceReport:
    """Structural MCS test: rank one and |alpha_k|^2 = 1/d for every k.
    
    When the test passes, the witness phases are read off the first
    column rho_{k1} = alpha_k conj(alpha_1), which fixes theta_1 = 0.
    """
    mcs_tol = get_settings().MCS_TOL if mcs_tol is None else mcs_tol
    d = rho.dim
    pure = float(rho.spectrum.eigenvalues[0]) >= 1.0 - mcs_tol
    uniform = float(np.max(np.abs(rho.diagonal() - 1.0 / d))) <= mcs_tol
    
    witness: tuple[float, ...] | None = None
    if pure and uniform:
        phases = np.mod(np.angle(rho.mat[:, 0]), 2.0 * math.pi)
        phases[0] = 0.0
        witness = tuple(float(t) for t in phases)
    
    return CoherenceReport(
        value=c_re(rho),
        max_possible=math.log2(d),
        is_mcs=witness is not None,
        witness_phases=witness,
        tol=max(rho.tol, 1e-9),
    )


def make_mcs(theta: npt.ArrayLike, d: int) -> DensityMatrix:
    """The MCS U|psi_d><psi_d|U^dagger with U = diag(e^{i theta_k}).
    
    Raises:
        DimensionMismatchError: If len(theta) != d
    """
    phases = np.asarray(theta, dtype=np.float64).reshape(-1)
    if phases.size != d:
        raise DimensionMismatchError(f"expected {d} phases, got {phases.size}")
    return from_pure(pure_from_phases(phases))


def cf_measure(x: CfInput | Sequence[float]) -> float:
    """The piecewise function f on the 4-outcome simplex.
    
    f(x) is the Shannon entropy of x when its least element is zero and
    log2(3) otherwise. Entries below 1e-12 count as zero.
    """
    cf_input = x if isinstance(x, CfInput) else CfInput(x=tuple(x))  # type: ignore[arg-type]
    values = np.asarray(cf_input.x, dtype=np.float64)
    values[values < CF_ZERO] = 0.0
    if float(np.min(values)) == 0.0:
        return shannon_entropy(values)
    return math.log2(3)


def cf_of_pure_state(psi: PureState) -> float:
    """C_f of a pure d=4 state, f applied to its populations |alpha_k|^2."""
    if psi.dim != 4:
        raise DimensionMismatchError(f"C_f is defined for d = 4, got d = {psi.dim}")
    populations = np.abs(psi.amplitudes) ** 2
    populations = populations / float(np.sum(populations))
    try:
        return cf_measure(CfInput(x=tuple(float(p) for p in populations)))  # type: ignore[arg-type]
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc

"""Kraus channels, incoherence, unitality and MCS preservation.

An incoherent channel preserves maximally coherent states exactly when it
acts as rho -> U rho U^dagger with U a permuted diagonal unitary. The
classifier decides this from the Kraus structure and cross-checks the
verdict by pushing random MCSs through the channel.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from coherence_lab.core.config import get_settings
from coherence_lab.core.exceptions import (
    ClassifierDisagreementError,
    DimensionMismatchError,
    IncompleteChannelError,
    ValidationError,
)
from coherence_lab.models.channel import (
    ChannelClassification,
    IncoherenceReport,
    KrausChannel,
    MCSWitness,
    PermScaledFactor,
)
from coherence_lab.models.matrix import ComplexMatrix, as_complex_matrix, frozen
from coherence_lab.models.state import DensityMatrix, PureState
from coherence_lab.services.coherence import c_re, is_mcs, make_mcs
from coherence_lab.services.linalg import frobenius
from coherence_lab.services.sampling import random_phase_vector
from coherence_lab.services.states import density_matrix, pure_from_phases

logger = logging.getLogger(__name__)


def kraus_channel(
    operators: npt.ArrayLike | list[npt.ArrayLike],
    tol: float | None = None,
) -> KrausChannel:
    """Validate Kraus operators against sum_n K_n^dagger K_n = I.
    
    Raises:
        ValidationError: If the operators are not square or differ in size
        IncompleteChannelError: If the completeness residual exceeds tol
    """
    tol = get_settings().TOL if tol is None else tol
    mats = tuple(as_complex_matrix(k, square=True) for k in operators)  # type: ignore[union-attr]
    if not mats:
        raise ValidationError("a channel needs at least one Kraus operator")
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise ValidationError(f"Kraus operators have mixed dimensions {sorted(dims)}")
    d = dims.pop()
    completeness = sum((m.conj().T @ m for m in mats), start=np.zeros((d, d), dtype=np.complex128))
    residual = frobenius(completeness - np.eye(d))
    if residual > tol:
        raise IncompleteChannelError(residual, tol)
    return KrausChannel(kraus=mats, d=d)


def apply(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """Return sum_n K_n rho K_n^dagger.
    
    Raises:
        DimensionMismatchError: If the channel and state dimensions differ
    """
    if ch.d != rho.dim:
        raise DimensionMismatchError(f"channel acts on d={ch.d}, state has d={rho.dim}")
    out = sum((k @ rho.mat @ k.conj().T for k in ch.kraus), start=np.zeros_like(rho.mat))
    return density_matrix(0.5 * (out + out.conj().T), rho.tol)


def _zero_threshold(k: ComplexMatrix) -> float:
    return get_settings().ZERO_THRESHOLD * frobenius(k)


def is_incoherent(ch: KrausChannel) -> IncoherenceReport:
    """Structural test: at most one nonzero entry per column of every K_n.
    
    Entries with |K_rc| <= ZERO_THRESHOLD * ||K_n||_F count as zero. The
    verdict is cross-checked against ``is_incoherent_definitional``.
    
    Raises:
        ClassifierDisagreementError: If the two tests disagree
    """
    witnesses: list[tuple[int, int]] = []
    for n, k in enumerate(ch.kraus):
        nonzero = np.abs(k) > _zero_threshold(k)
        for column in np.flatnonzero(nonzero.sum(axis=0) > 1):
            witnesses.append((n, int(column)))
    report = IncoherenceReport(incoherent=not witnesses, witnesses=tuple(witnesses))
    
    definitional = is_incoherent_definitional(ch)
    if definitional != report.incoherent:
        logger.debug("structural and definitional incoherence tests disagree")
        raise ClassifierDisagreementError(
            f"column test says incoherent={report.incoherent}, "
            f"basis-state test says incoherent={definitional}"
        )
    return report


def is_incoherent_definitional(ch: KrausChannel) -> bool:
    """Apply every K_n to every |k><k| and require diagonal outputs.
    
    An off-diagonal |M_ij| of M = K_n|k><k|K_n^dagger counts as coherence
    when it exceeds ZERO_THRESHOLD * ||K_n||_F * sqrt(max_i M_ii).
    """
    for k in ch.kraus:
        threshold = _zero_threshold(k)
        for column in range(ch.d):
            out = np.outer(k[:, column], k[:, column].conj())
            populations = np.real(np.diagonal(out))
            scale = threshold * math.sqrt(max(float(np.max(populations)), 0.0))
            off = np.abs(out - np.diag(np.diagonal(out)))
            if float(np.max(off)) > scale:
                return False
    return True


def is_unital(ch: KrausChannel, tol: float | None = None) -> bool:
    """Whether sum_n K_n K_n^dagger = I within tol."""
    tol = get_settings().TOL if tol is None else tol
    image = sum(
        (k @ k.conj().T for k in ch.kraus), start=np.zeros((ch.d, ch.d), dtype=np.complex128)
    )
    return frobenius(image - np.eye(ch.d)) <= tol


def identity_decomposition_phases(d: int) -> np.ndarray:
    """Phase table alpha_jk = 2 pi (k-1)(j-1) / d; row j defines |phi_j>."""
    if d < 1:
        raise ValidationError(f"d must be positive, got {d}")
    idx = np.arange(d, dtype=np.float64)
    return 2.0 * math.pi * np.outer(idx, idx) / d


def identity_mcs_decomposition(d: int) -> tuple[PureState, ...]:
    """d MCSs |phi_j> with sum_j |phi_j><phi_j| = I."""
    return tuple(pure_from_phases(row) for row in identity_decomposition_phases(d))


def dephased_identity_image(ch: KrausChannel) -> ComplexMatrix:
    """sum_j diag(Phi(|phi_j><phi_j|)) over the identity decomposition.
    
    Equals the diagonal of Phi(I); an MCS-preserving incoherent channel
    maps each |phi_j> to an MCS with diagonal I/d, so the sum is I.
    """
    total = np.zeros((ch.d, ch.d), dtype=np.complex128)
    for phi in identity_mcs_decomposition(ch.d):
        image = apply(ch, density_matrix(phi.projector()))
        total += np.diag(np.diagonal(image.mat))
    return frozen(total)


def factorize(k: npt.ArrayLike, tol: float | None = None) -> PermScaledFactor | None:
    """Write K = a * diag(phases) * Pi, or return None when impossible.
    
    Fails when a column has no nonzero entry or more than one, when two
    columns share a row, or when the nonzero moduli are not all equal.
    """
    tol = get_settings().TOL if tol is None else tol
    mat = as_complex_matrix(k, square=True)
    d = mat.shape[0]
    nonzero = np.abs(mat) > _zero_threshold(mat)
    if not np.all(nonzero.sum(axis=0) == 1):
        return None
    perm = tuple(int(np.flatnonzero(nonzero[:, c])[0]) for c in range(d))
    if len(set(perm)) != d:
        return None
    
    entries = mat[list(perm), list(range(d))]
    scale = complex(entries[0])
    ratios = entries / scale
    if float(np.max(np.abs(np.abs(ratios) - 1.0))) > tol:
        return None
    phases = np.ones(d, dtype=np.complex128)
    phases[list(perm)] = ratios / np.abs(ratios)
    factor = PermScaledFactor(scale=scale, perm=perm, phases=frozen(phases))
    if frobenius(factor.matrix() - mat) > tol * max(1.0, frobenius(mat)):
        return None
    return factor


def _single_effective_term(factors: tuple[PermScaledFactor, ...], tol: float) -> bool:
    """All factors share Pi and their diagonals agree (already gauge-fixed)."""
    first = factors[0]
    return all(
        f.perm == first.perm and float(np.max(np.abs(f.phases - first.phases))) <= tol
        for f in factors[1:]
    )


def _sample_mcs_images(
    ch: KrausChannel,
    rng: np.random.Generator,
    samples: int,
    mcs_tol: float,
) -> tuple[bool, MCSWitness | None]:
    """Push |psi_d> and then ``samples - 1`` random MCSs through the channel."""
    d = ch.d
    for index in range(samples):
        phases = np.zeros(d) if index == 0 else random_phase_vector(rng, d)
        rho = make_mcs(phases, d)
        out = apply(ch, rho)
        report = is_mcs(out, mcs_tol)
        if not report.is_mcs:
            witness = MCSWitness(
                input_phases=frozen(phases),
                input_state=rho,
                output_state=out,
                coherence_drop=math.log2(d) - report.value,
            )
            return False, witness
    return True, None


def classify_mcs_preservation(
    ch: KrausChannel,
    samples: int | None = None,
    *,
    rng: np.random.Generator | None = None,
    tol: float | None = None,
    mcs_tol: float | None = None,
) -> ChannelClassification:
    """Decide whether an incoherent channel maps every MCS to an MCS.
    
    The structural verdict requires incoherence, unitality and a
    factorisation K_n = a_n D_n Pi_n of every retained operator with one
    common D Pi. Operators with ||K_n||_F <= ZERO_THRESHOLD are dropped.
    For incoherent channels the verdict is cross-checked by applying the
    channel to ``samples`` MCSs (|psi_d> first, then random phases).
    
    Args:
        ch: Channel to classify
        samples: Monte-Carlo sample count (settings MONTE_CARLO_SAMPLES)
        rng: Random generator (seeded from settings SEED by default)
        tol: Tolerance for unitality and factor comparisons
        mcs_tol: Tolerance of the MCS test applied to sampled outputs
        
    Raises:
        ClassifierDisagreementError: If the structural verdict and the
            sampled MCSs contradict each other
    """
    settings = get_settings()
    samples = settings.MONTE_CARLO_SAMPLES if samples is None else samples
    rng = np.random.default_rng(settings.SEED) if rng is None else rng
    tol = settings.TOL if tol is None else tol
    mcs_tol = settings.MCS_TOL if mcs_tol is None else mcs_tol
    
    incoherent = is_incoherent(ch).incoherent
    unital = is_unital(ch, tol)
    
    retained = [k for k in ch.kraus if frobenius(k) > settings.ZERO_THRESHOLD]
    dropped = len(ch.kraus) - len(retained)
    if dropped:
        logger.debug("dropped %d negligible Kraus operators", dropped)
    
    factor_list = [factorize(k, tol) for k in retained]
    factored = [f for f in factor_list if f is not None]
    factors = tuple(factored) if len(factored) == len(factor_list) else None
    structural = (
        incoherent and unital and factors is not None and _single_effective_term(factors, tol)
    )
    
    if not incoherent:
        logger.info("channel is not incoherent; MCS preservation not assessed")
        return ChannelClassification(
            incoherent=False, unital=unital, preserves_mcs=False, factors=factors
        )
    
    sampled, witness = _sample_mcs_images(ch, rng, samples, mcs_tol)
    if sampled != structural:
        logger.debug(
            "structural verdict %s contradicts %d sampled MCSs (%s)", structural, samples, sampled
        )
        raise ClassifierDisagreementError(
            f"Kraus structure says preserves_mcs={structural}, "
            f"probing {samples} MCSs says {sampled}"
            + (f" (coherence drop {witness.coherence_drop:.3e})" if witness else "")
        )
    logger.info(
        "classified channel: incoherent=%s unital=%s preserves_mcs=%s",
        incoherent, unital, structural,
    )
    return ChannelClassification(
        incoherent=True,
        unital=unital,
        preserves_mcs=structural,
        factors=factors,
        witness=witness,
        samples=samples,
    )

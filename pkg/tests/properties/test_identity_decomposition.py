"""Property-based tests for the decomposition of the identity into MCS projectors.

**Feature: coherence-lab, Property 14: Identity Decomposition**
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coherence_lab.models.phase import wrap_phase
from coherence_lab.services.channels import (
    identity_decomposition_phases,
    identity_mcs_decomposition,
)
from coherence_lab.services.coherence import is_mcs
from coherence_lab.services.linalg import frobenius
from coherence_lab.services.states import density_matrix


@pytest.mark.parametrize("d", range(1, 17))
def test_fourier_mcs_projectors_sum_to_identity(d: int) -> None:
    """
    **Feature: coherence-lab, Property 14: Identity Decomposition**
    
    *For any* d, the d states with phases 2 pi (k-1)(j-1)/d SHALL satisfy
    ||sum_j |phi_j><phi_j| - I||_F <= 1e-9, and every |phi_j> SHALL be an MCS.
    """
    states = identity_mcs_decomposition(d)
    total = sum((phi.projector() for phi in states), start=np.zeros((d, d), dtype=np.complex128))
    
    assert len(states) == d
    assert frobenius(total - np.eye(d)) <= 1e-9
    assert all(is_mcs(density_matrix(phi.projector())).is_mcs for phi in states)


@settings(max_examples=16)
@given(d=st.integers(min_value=2, max_value=16))
def test_consecutive_rows_shift_by_a_fourier_step(d: int) -> None:
    """
    **Feature: coherence-lab, Property 14: Identity Decomposition**
    
    *For any* d and rows j, j+1 of the phase table,
    alpha_{j+1,k} - alpha_{j+1,l} SHALL equal alpha_{j,k} - alpha_{j,l} + 2 pi (k-l)/d
    modulo 2 pi.
    """
    alpha = identity_decomposition_phases(d)
    k = np.arange(d)
    step = 2 * math.pi * (k[:, None] - k[None, :]) / d
    
    for j in range(d - 1):
        diff_next = alpha[j + 1][:, None] - alpha[j + 1][None, :]
        diff = alpha[j][:, None] - alpha[j][None, :]
        assert float(np.max(np.abs(wrap_phase(diff_next - diff - step)))) <= 1e-9

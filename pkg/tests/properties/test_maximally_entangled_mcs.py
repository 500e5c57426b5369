"""Property-based tests for states that are maximally coherent and maximally entangled.

**Feature: coherence-lab, Property 13: Maximally Entangled MCS**
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coherence_lab.services.bipartite import make_mcs_max_entangled, max_entangled_phases
from coherence_lab.services.coherence import c_re, is_mcs
from coherence_lab.services.linalg import frobenius
from coherence_lab.services.states import reduced_states


@pytest.mark.parametrize("d", range(2, 7))
def test_fourier_phases_give_maximally_mixed_marginals(d: int) -> None:
    """
    **Feature: coherence-lab, Property 13: Maximally Entangled MCS**
    
    *For any* d >= 2, the pure state built from theta_ij = -2 pi (i-1)(j-1)/d
    SHALL be an MCS on d^2 levels with c_re = 2 log2 d within 1e-9, and its
    reduced state SHALL satisfy ||rho_A - I/d||_F <= 1e-9.
    """
    rho = make_mcs_max_entangled(d)
    rho_a, _ = reduced_states(rho, d, d)
    
    assert is_mcs(rho).is_mcs
    assert abs(c_re(rho) - 2 * math.log2(d)) <= 1e-9
    assert frobenius(rho_a.mat - np.eye(d) / d) <= 1e-9


@settings(max_examples=10)
@given(d=st.integers(min_value=2, max_value=12))
def test_row_differences_sum_to_zero(d: int) -> None:
    """
    **Feature: coherence-lab, Property 13: Maximally Entangled MCS**
    
    *For any* d >= 2 and rows i != s of the Fourier phase table,
    sum_j e^{i(theta_ij - theta_sj)} SHALL vanish within 1e-12.
    """
    theta = max_entangled_phases(d).theta
    
    sums = np.exp(1j * theta) @ np.exp(-1j * theta).T
    off = sums - np.diag(np.diagonal(sums))
    assert float(np.max(np.abs(off))) <= 1e-12 * d

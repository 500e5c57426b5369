"""Property-based tests for the 2 x 3 linear-phase state.

**Feature: coherence-lab, Property 12: Linear-Phase State Factorises**
"""

import math

import numpy as np
from hypothesis import given, settings, strategies as st

from coherence_lab.services.bipartite import counterexample_23
from coherence_lab.services.coherence import is_mcs
from coherence_lab.services.states import reduced_states

thetas = st.floats(min_value=1e-3, max_value=2 * math.pi - 1e-3, allow_nan=False)


@settings(max_examples=100, deadline=None)
@given(theta=thetas)
def test_linear_phase_state_has_zero_gap(theta: float) -> None:
    """
    **Feature: coherence-lab, Property 12: Linear-Phase State Factorises**
    
    *For any* theta in (0, 2 pi), the state sum_k e^{i(k-1) theta}|k>/sqrt(6)
    on 2 x 3 SHALL have super-additivity gap at most 1e-9, SHALL equal the
    product of its reduced states, and both reduced states SHALL be MCSs
    with the entries (1/2) e^{3i(i-s) theta} and (1/3) e^{i(j-t) theta}.
    """
    rho, report = counterexample_23(theta)
    rho_a, rho_b = reduced_states(rho, 2, 3)
    
    assert abs(report.gap) <= 1e-9
    assert report.is_product
    assert report.product_distance <= 1e-9
    i = np.arange(2)
    j = np.arange(3)
    np.testing.assert_allclose(
        rho_a.mat, 0.5 * np.exp(3j * theta * (i[:, None] - i[None, :])), atol=1e-12
    )
    np.testing.assert_allclose(
        rho_b.mat, np.exp(1j * theta * (j[:, None] - j[None, :])) / 3, atol=1e-12
    )
    assert is_mcs(rho_a).is_mcs
    assert is_mcs(rho_b).is_mcs

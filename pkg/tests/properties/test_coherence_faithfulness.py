"""Property-based tests for faithfulness of the relative entropy of coherence.

**Feature: coherence-lab, Property 5: Coherence Faithfulness**
"""

import numpy as np
from hypothesis import given, settings

from coherence_lab.services.coherence import c_l1, c_re
from coherence_lab.services.sampling import random_density_matrix, random_incoherent_state
from tests.helpers import seeds, small_dims


@settings(max_examples=1000, deadline=None)
@given(seed=seeds, d=small_dims)
def test_incoherent_states_have_zero_coherence(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 5: Coherence Faithfulness**
    
    *For any* incoherent state, c_re and c_l1 SHALL both be zero within 1e-10.
    """
    rho = random_incoherent_state(np.random.default_rng(seed), d)
    
    assert abs(c_re(rho)) <= 1e-10
    assert c_l1(rho) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(seed=seeds, d=small_dims)
def test_coherent_states_have_positive_coherence(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 5: Coherence Faithfulness**
    
    *For any* state, c_re SHALL be non-negative, and SHALL be strictly
    positive when some off-diagonal entry exceeds 1e-3 in modulus.
    """
    rho = random_density_matrix(np.random.default_rng(seed), d)
    value = c_re(rho)
    
    off = np.abs(rho.mat - np.diag(np.diagonal(rho.mat)))
    assert value >= 0.0
    if float(np.max(off)) > 1e-3:
        assert value > 0.0

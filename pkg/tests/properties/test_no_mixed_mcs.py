"""Property-based tests for the absence of mixed maximally coherent states.

**Feature: coherence-lab, Property 9: No Mixed MCS**
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from coherence_lab.services.coherence import c_re, is_mcs
from coherence_lab.services.sampling import random_density_matrix, random_pure_state
from coherence_lab.services.states import from_pure
from tests.helpers import seeds, small_dims

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("d", [2, 3, 4])
@settings(max_examples=1000, deadline=None)
@given(seed=seeds, rank=st.integers(min_value=2, max_value=4))
def test_mixed_states_fall_short_of_log_d(seed: int, d: int, rank: int) -> None:
    """
    **Feature: coherence-lab, Property 9: No Mixed MCS**
    
    *For any* mixed state with purity at most 0.999, c_re SHALL stay at
    least 1e-3 below log2 d and is_mcs SHALL be false.
    """
    rho = random_density_matrix(np.random.default_rng(seed), d, min(rank, d))
    assume(rho.purity <= 0.999)
    
    assert c_re(rho) <= math.log2(d) - 1e-3
    assert not is_mcs(rho).is_mcs


@settings(max_examples=1000, deadline=None)
@given(seed=seeds, d=small_dims)
def test_non_uniform_pure_states_are_not_mcs(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 9: No Mixed MCS**
    
    *For any* pure state whose populations deviate from 1/d by more than
    1e-2, c_re SHALL be below log2 d - 1e-5 and is_mcs SHALL be false.
    """
    psi = random_pure_state(np.random.default_rng(seed), d)
    assume(float(np.max(np.abs(np.abs(psi.amplitudes) ** 2 - 1 / d))) > 1e-2)
    rho = from_pure(psi)
    
    assert c_re(rho) < math.log2(d) - 1e-5
    assert not is_mcs(rho).is_mcs

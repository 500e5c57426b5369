"""Property-based tests for monotonicity of coherence under incoherent channels.

**Feature: coherence-lab, Property 6: Coherence Monotonicity**
"""

import numpy as np
from hypothesis import given, settings

from coherence_lab.services.channels import apply, is_incoherent
from coherence_lab.services.coherence import c_re
from coherence_lab.services.sampling import random_density_matrix, random_incoherent_channel
from tests.helpers import seeds, small_dims


@settings(max_examples=200, deadline=None)
@given(seed=seeds, d=small_dims)
def test_incoherent_channels_do_not_increase_coherence(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 6: Coherence Monotonicity**
    
    *For any* state rho and incoherent channel Phi, c_re(Phi(rho)) SHALL
    not exceed c_re(rho) + 1e-9.
    """
    rng = np.random.default_rng(seed)
    ch = random_incoherent_channel(rng, d)
    rho = random_density_matrix(rng, d)
    
    assert is_incoherent(ch).incoherent
    assert c_re(apply(ch, rho)) <= c_re(rho) + 1e-9

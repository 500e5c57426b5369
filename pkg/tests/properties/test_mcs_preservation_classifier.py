"""Property-based tests for the MCS-preservation classifier of incoherent channels.

**Feature: coherence-lab, Property 15: MCS Preservation Classifier**
"""

import numpy as np
import pytest
from hypothesis import given, settings

from coherence_lab.services.channels import classify_mcs_preservation
from coherence_lab.services.sampling import (
    random_perm_diag_channel,
    random_unital_mixture_channel,
)
from tests.helpers import seeds, small_dims

pytestmark = pytest.mark.slow


@settings(max_examples=200, deadline=None)
@given(seed=seeds, d=small_dims)
def test_permuted_diagonal_unitaries_preserve_mcs(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 15: MCS Preservation Classifier**
    
    *For any* single-term channel {e^{i phi} D Pi}, the classifier SHALL
    report preserves_mcs with every one of 50 sampled MCSs mapped to an MCS.
    """
    rng = np.random.default_rng(seed)
    ch = random_perm_diag_channel(rng, d)
    
    result = classify_mcs_preservation(ch, 50, rng=rng)
    
    assert result.incoherent
    assert result.unital
    assert result.preserves_mcs
    assert result.witness is None
    assert result.samples == 50


@settings(max_examples=200, deadline=None)
@given(seed=seeds, d=small_dims)
def test_unital_mixtures_do_not_preserve_mcs(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 15: MCS Preservation Classifier**
    
    *For any* incoherent unital channel with two non-proportional
    D_n Pi_n terms, the classifier SHALL report preserves_mcs false with a
    witness whose coherence drop exceeds 1e-6.
    """
    rng = np.random.default_rng(seed)
    ch = random_unital_mixture_channel(rng, d)
    
    result = classify_mcs_preservation(ch, 50, rng=rng)
    
    assert result.incoherent
    assert result.unital
    assert not result.preserves_mcs
    assert result.witness is not None
    assert result.witness.coherence_drop > 1e-6

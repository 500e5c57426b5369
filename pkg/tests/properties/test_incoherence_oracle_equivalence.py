"""Property-based tests comparing the structural and definitional incoherence tests.

**Feature: coherence-lab, Property 16: Incoherence Oracle Equivalence**
"""

import numpy as np
from hypothesis import given, settings

from coherence_lab.services.channels import (
    is_incoherent,
    is_incoherent_definitional,
    kraus_channel,
)
from coherence_lab.services.sampling import random_incoherent_channel, random_unitary
from tests.helpers import seeds, small_dims


@settings(max_examples=500, deadline=None)
@given(seed=seeds, d=small_dims)
def test_generated_incoherent_channels_pass_both_tests(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 16: Incoherence Oracle Equivalence**
    
    *For any* channel built from weighted partial permutations, the column
    test and the basis-state test SHALL both report incoherent.
    """
    ch = random_incoherent_channel(np.random.default_rng(seed), d)
    
    assert is_incoherent(ch).incoherent
    assert is_incoherent_definitional(ch)


@settings(max_examples=100, deadline=None)
@given(seed=seeds, d=small_dims)
def test_haar_unitaries_fail_both_tests(seed: int, d: int) -> None:
    """
    **Feature: coherence-lab, Property 16: Incoherence Oracle Equivalence**
    
    *For any* Haar-random unitary channel {U}, the column test SHALL name a
    column with two nonzero entries and the basis-state test SHALL agree.
    """
    ch = kraus_channel([random_unitary(np.random.default_rng(seed), d)])
    
    report = is_incoherent(ch)
    
    assert not report.incoherent
    assert report.witnesses
    assert not is_incoherent_definitional(ch)

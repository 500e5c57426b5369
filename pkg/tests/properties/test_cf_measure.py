"""Property-based tests for the piecewise measure C_f on four outcomes.

**Feature: coherence-lab, Property 17: Piecewise Measure Branches**
"""

import math

import numpy as np
from hypothesis import given, settings, strategies as st

from coherence_lab.services.coherence import cf_measure
from coherence_lab.services.states import shannon_entropy
from tests.helpers import seeds


@settings(max_examples=100)
@given(seed=seeds, empty=st.integers(min_value=0, max_value=3))
def test_boundary_points_use_shannon_entropy(seed: int, empty: int) -> None:
    """
    **Feature: coherence-lab, Property 17: Piecewise Measure Branches**
    
    *For any* probability vector on four outcomes with a zero entry,
    cf_measure SHALL equal its Shannon entropy and SHALL not exceed log2 3.
    """
    x = np.random.default_rng(seed).dirichlet(np.ones(4))
    x[empty] = 0.0
    x /= x.sum()
    
    value = cf_measure(tuple(float(v) for v in x))
    
    assert abs(value - shannon_entropy(x)) <= 1e-12
    assert value <= math.log2(3) + 1e-12


@settings(max_examples=100)
@given(seed=seeds)
def test_interior_points_attain_log_three(seed: int) -> None:
    """
    **Feature: coherence-lab, Property 17: Piecewise Measure Branches**
    
    *For any* probability vector on four outcomes whose entries all exceed
    1e-12, cf_measure SHALL equal log2 3.
    """
    x = 0.001 + 0.996 * np.random.default_rng(seed).dirichlet(np.ones(4))
    
    assert cf_measure(tuple(float(v) for v in x)) == math.log2(3)

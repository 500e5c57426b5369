"""Small matrix builders and Hypothesis strategies shared by the tests."""

import numpy as np
from hypothesis import strategies as st

# Seeds handed to numpy generators
seeds = st.integers(min_value=0, max_value=2**32 - 1)

# Dimensions small enough for the pure-Python eigensolver
small_dims = st.integers(min_value=2, max_value=4)


def plus_state(d: int = 2) -> np.ndarray:
    """|psi_d><psi_d| with every entry 1/d."""
    return np.full((d, d), 1.0 / d, dtype=np.complex128)


def basis_projector(d: int, k: int) -> np.ndarray:
    out = np.zeros((d, d), dtype=np.complex128)
    out[k, k] = 1.0
    return out


def bell_state() -> np.ndarray:
    """(|00> + |11>)(<00| + <11|) / 2."""
    out = np.zeros((4, 4), dtype=np.complex128)
    out[np.ix_([0, 3], [0, 3])] = 0.5
    return out

"""Dense complex matrix plumbing shared by every model."""

from typing import Any

import numpy as np
import numpy.typing as npt

from coherence_lab.core.exceptions import NonFiniteError, ValidationError

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


def frozen(array: npt.NDArray[Any]) -> npt.NDArray[Any]:
    """Return a read-only copy of ``array``."""
    out = np.array(array, copy=True)
    out.flags.writeable = False
    return out


def as_complex_matrix(data: Any, *, square: bool = False) -> ComplexMatrix:
    """Coerce ``data`` to a read-only 2-D complex128 array.
    
    Raises:
        ValidationError: If the input is not two-dimensional, is empty, or
            is not square when ``square`` is requested.
        NonFiniteError: If any entry is NaN or infinite.
    """
    mat = np.asarray(data, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] == 0 or mat.shape[1] == 0:
        raise ValidationError(f"expected a non-empty 2-D matrix, got shape {mat.shape}")
    if square and mat.shape[0] != mat.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise NonFiniteError("matrix entries must be finite (NaN/Inf found)")
    return frozen(mat)

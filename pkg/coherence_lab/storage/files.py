"""Reading and writing matrix files."""

import hashlib
import logging
from pathlib import Path

import numpy as np
from pydantic import ValidationError as PydanticValidationError

from coherence_lab.core.exceptions import ParseError
from coherence_lab.models.matrix import ComplexMatrix
from coherence_lab.schemas.matrix_file import MatrixFile, MatrixKind

logger = logging.getLogger(__name__)


def encode_matrix(mat: np.ndarray) -> list[list[list[float]]]:
    """Nested rows of [re, im] pairs."""
    arr = np.asarray(mat, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in arr]


def decode_matrix(rows: list[list[list[float]]]) -> ComplexMatrix:
    data = np.asarray(rows, dtype=np.float64)
    out = np.empty(data.shape[:-1], dtype=np.complex128)
    out.real = data[..., 0]
    out.imag = data[..., 1]
    return out


def to_matrix_file(kind: MatrixKind, matrices: list[np.ndarray]) -> MatrixFile:
    """Build a MatrixFile from numpy matrices of one shape."""
    rows, cols = np.asarray(matrices[0]).shape
    return MatrixFile(
        kind=kind,
        dim=rows,
        cols=cols if kind is MatrixKind.PHASE_MATRIX else None,
        entries=[encode_matrix(m) for m in matrices],
    )


def digest(path: Path) -> str:
    """sha256 hex digest of a file's bytes."""
    return hashlib.sha256(path.read_bytes()).hexdigest()


def read_matrix_file(path: Path, expected: MatrixKind | None = None) -> MatrixFile:
    """Parse and shape-check a matrix file.
    
    Raises:
        ParseError: If the file is missing, is not valid JSON, fails the
            schema, or holds a different kind than ``expected``
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        document = MatrixFile.model_validate_json(text)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(f"{path}: {first['msg']} at {list(first['loc'])}") from exc
    if expected is not None and document.kind is not expected:
        raise ParseError(f"{path}: expected kind {expected.value!r}, found {document.kind.value!r}")
    logger.debug("read %s (%s, dim=%d)", path, document.kind.value, document.dim)
    return document


def write_matrix_file(path: Path, document: MatrixFile) -> Path:
    """Write a matrix file as indented JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.debug("wrote %s", path)
    return path


def matrices(document: MatrixFile) -> list[ComplexMatrix]:
    """Decode every matrix of a document."""
    return [decode_matrix(m) for m in document.entries]

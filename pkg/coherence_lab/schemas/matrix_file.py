"""On-disk representation of states, Kraus sets and phase tables."""

import enum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

# [re, im]
ComplexPair = Annotated[list[float], Field(min_length=2, max_length=2)]
MatrixRows = list[list[ComplexPair]]


class MatrixKind(str, enum.Enum):
    """Kind of object stored in a matrix file.
    
    Values:
        STATE: One d x d density matrix
        KRAUS_SET: One or more d x d Kraus operators
        PHASE_MATRIX: One d x cols table of real phases (imaginary parts 0)
    """
    
    STATE = "state"
    KRAUS_SET = "kraus-set"
    PHASE_MATRIX = "phase-matrix"


class MatrixFile(BaseModel):
    """Self-describing JSON document holding one or more matrices.
    
    ``entries`` lists matrices; each matrix is a list of rows and each row
    a list of [re, im] pairs. Floats are written in shortest round-trip
    form, so write-then-read reproduces every entry bit for bit.
    """
    
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "state",
                "dim": 2,
                "entries": [[[[0.5, 0.0], [0.5, 0.0]], [[0.5, 0.0], [0.5, 0.0]]]],
            }
        }
    )
    
    kind: MatrixKind
    dim: int = Field(..., gt=0, description="Number of rows of every matrix")
    cols: int | None = Field(default=None, gt=0, description="Columns of a phase table")
    entries: list[MatrixRows] = Field(..., min_length=1)
    
    @property
    def n_cols(self) -> int:
        return self.dim if self.cols is None else self.cols
    
    @model_validator(mode="after")
    def check_shapes(self) -> "MatrixFile":
        """Entries must match dim (and cols) and the kind's matrix count."""
        if self.kind is not MatrixKind.KRAUS_SET and len(self.entries) != 1:
            raise ValueError(f"a {self.kind.value} file holds exactly one matrix")
        if self.kind is not MatrixKind.PHASE_MATRIX and self.cols not in (None, self.dim):
            raise ValueError(f"a {self.kind.value} file holds square matrices")
        for index, matrix in enumerate(self.entries):
            if len(matrix) != self.dim or any(len(row) != self.n_cols for row in matrix):
                raise ValueError(
                    f"matrix {index} does not have shape {self.dim}x{self.n_cols}"
                )
        return self

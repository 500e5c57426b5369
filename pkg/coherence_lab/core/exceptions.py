"""Exception hierarchy for coherence-lab.

Every error carries the process exit code the CLI reports for it, so the
command-line front end can map failures without inspecting types.
"""


class CoherenceLabError(Exception):
    """Base library exception.
    
    All custom exceptions should inherit from this class.
    """
    
    def __init__(self, message: str, exit_code: int = 1) -> None:
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class ValidationError(CoherenceLabError):
    """Input violates a structural invariant.
    
    Raised when a matrix, state, channel or parameter fails validation.
    """
    
    def __init__(self, message: str) -> None:
        super().__init__(message=message, exit_code=2)


class NonFiniteError(ValidationError):
    """A matrix contains NaN or infinite entries."""


class NotHermitianError(ValidationError):
    """Matrix is not Hermitian within tolerance."""
    
    def __init__(self, residual: float, tol: float) -> None:
        super().__init__(
            f"matrix is not Hermitian: ||A - A^dagger||_F = {residual:.3e} exceeds {tol:.3e}"
        )
        self.residual = residual
        self.tol = tol


class NotPositiveError(ValidationError):
    """Density matrix has an eigenvalue below -tol."""
    
    def __init__(self, min_eigenvalue: float, tol: float) -> None:
        super().__init__(
            f"matrix is not positive semidefinite: smallest eigenvalue "
            f"{min_eigenvalue:.3e} is below -{tol:.3e}"
        )
        self.min_eigenvalue = min_eigenvalue
        self.tol = tol


class TraceError(ValidationError):
    """Density matrix trace differs from one."""
    
    def __init__(self, trace: float, tol: float) -> None:
        super().__init__(f"trace must equal 1: got {trace!r} (tolerance {tol:.3e})")
        self.trace = trace
        self.tol = tol


class IncompleteChannelError(ValidationError):
    """Kraus operators fail the completeness relation sum K^dagger K = I."""
    
    def __init__(self, residual: float, tol: float) -> None:
        super().__init__(
            f"Kraus operators are not trace preserving: "
            f"||sum K^dagger K - I||_F = {residual:.3e} exceeds {tol:.3e}"
        )
        self.residual = residual
        self.tol = tol


class DimensionMismatchError(ValidationError):
    """Dimensions of the operands do not fit together."""


class NotSquareError(ValidationError):
    """A square input (matrix or phase table) was expected."""


class OutOfRangeError(ValidationError):
    """A parameter lies outside its admissible range."""


class ConfigurationError(ValidationError):
    """A COHERENCE_LAB_* setting failed to load."""


class NoConvergenceError(CoherenceLabError):
    """Iterative eigensolver reached its sweep cap.
    
    Raised with the off-diagonal norm left when the iteration stopped.
    """
    
    def __init__(self, sweeps: int, off_norm: float) -> None:
        super().__init__(
            message=(
                f"Jacobi iteration did not converge after {sweeps} sweeps "
                f"(off-diagonal norm {off_norm:.3e})"
            ),
            exit_code=1,
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


class ParseError(CoherenceLabError):
    """A matrix file could not be read or decoded."""
    
    def __init__(self, message: str) -> None:
        super().__init__(message=message, exit_code=1)


class ClassifierDisagreementError(CoherenceLabError):
    """Structural and sampled verdicts contradict each other.
    
    The two decision paths are logically equivalent, so a contradiction
    points at a tolerance or implementation fault and is never resolved
    silently.
    """
    
    def __init__(self, message: str) -> None:
        super().__init__(message=message, exit_code=3)

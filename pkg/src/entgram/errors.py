"""Exception types shared across the package.

Every failure mode that callers are expected to handle gets its own class so
that CLI exit codes and tests can dispatch on type rather than message text.
"""

from __future__ import annotations

__all__ = [
    "EntgramError",
    "ShapeMismatch",
    "DimensionMismatch",
    "NotHermitian",
    "NoConvergence",
    "NotPSD",
    "ZeroState",
    "NotNormalized",
    "NotUnitary",
    "TraceNotOne",
    "NegativeEigenvalue",
    "InfeasibleParams",
    "UnknownFamily",
    "InfeasibleConstraint",
    "InvalidInput",
]


class EntgramError(Exception):
    """Base class for all package-specific errors."""


class InvalidInput(EntgramError):
    """Malformed user-supplied data (bad JSON field, bad grid spec, ...)."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"invalid field '{field}': {message}")


class ShapeMismatch(EntgramError):
    """An array does not have the shape an operation requires."""


class DimensionMismatch(EntgramError):
    """Two objects that must share a dimension do not."""


class NotHermitian(EntgramError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class NoConvergence(EntgramError):
    """An iterative routine hit its iteration cap before converging."""


class NotPSD(EntgramError):
    """A matrix required to be positive semidefinite is not."""


class ZeroState(EntgramError):
    """A state vector with (numerically) zero norm cannot be normalized."""


class NotNormalized(EntgramError):
    """A state passed with normalization disabled does not have unit norm."""


class NotUnitary(EntgramError):
    """A matrix required to be unitary is not, beyond tolerance."""


class TraceNotOne(EntgramError):
    """A matrix required to have unit trace does not."""


class NegativeEigenvalue(EntgramError):
    """An eigenvalue is negative beyond the semidefiniteness tolerance."""


class InfeasibleParams(EntgramError):
    """Closed-form parameters lie outside the feasible region."""


class UnknownFamily(EntgramError):
    """A sweep family label is not one of the defined families."""


class InfeasibleConstraint(EntgramError):
    """A constraint excludes every admissible matrix."""

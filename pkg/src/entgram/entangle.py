"""Entanglement measures computed from Gram matrices.

The central quantity is the spectral entropy ``-sum(w * log w)`` of a
unit-trace Gram matrix, which equals the entanglement entropy of the state
the matrix came from.  ``deviation`` measures the distance from the maximally
balanced matrix (1/d on the diagonal, zeros elsewhere) over the upper
triangle *including* the diagonal; zero deviation is equivalent to maximal
entropy log d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import InfeasibleParams, InvalidInput, NegativeEigenvalue, TraceNotOne
from .gram import GramMatrix, gram_from_state
from .state import PureState

__all__ = [
    "entropy",
    "entropy_from_eigenvalues",
    "max_entropy",
    "deviation",
    "deviation_from_entries",
    "max_deviation",
    "D2Params",
    "d2_closed_form",
    "d2_deviation",
    "EntanglementReport",
    "analyze",
    "report_to_json",
]

_LOG_BASES = ("e", "2")


def _check_base(base: str) -> None:
    if base not in _LOG_BASES:
        raise InvalidInput("base", f"expected one of {_LOG_BASES}, got {base!r}")


def entropy_from_eigenvalues(eigenvalues, base: str = "e") -> float:
    """Spectral entropy of a probability-like eigenvalue list.

    Weights at or below ``TOL_ZERO_EIG`` contribute zero (the w log w limit);
    weights below ``TOL_PSD`` raise; small negatives in between are clamped.
    """
    _check_base(base)
    total = 0.0
    for w in np.asarray(eigenvalues, dtype=float):
        if w < numerics.TOL_PSD:
            raise NegativeEigenvalue(
                f"eigenvalue {w:.3e} is below the tolerance {numerics.TOL_PSD:.1e}"
            )
        if w <= numerics.TOL_ZERO_EIG:
            continue
        total -= w * math.log(w)
    if base == "2":
        total /= math.log(2.0)
    return total


def entropy(g: GramMatrix, base: str = "e") -> float:
    """Spectral entropy of a unit-trace Gram matrix.

    Raises
    ------
    TraceNotOne
        If the trace is not 1 within ``TOL_TRACE``.
    NegativeEigenvalue
        If an eigenvalue falls below the semidefiniteness tolerance.
    """
    trace = g.trace()
    if abs(trace - 1.0) > numerics.TOL_TRACE:
        raise TraceNotOne(f"trace {trace:.15g} is not 1 within {numerics.TOL_TRACE:.1e}")
    eigs = numerics.eigh(g.entries).eigenvalues
    return entropy_from_eigenvalues(eigs, base)


def max_entropy(d: int, base: str = "e") -> float:
    """Largest entropy attainable in dimension d: log d."""
    _check_base(base)
    return math.log2(d) if base == "2" else math.log(d)


def deviation_from_entries(entries: np.ndarray) -> float:
    """Deviation of a raw Hermitian array (see :func:`deviation`)."""
    d = entries.shape[0]
    target = np.eye(d) / d
    diff = entries - target
    total = 0.0
    for i in range(d):
        for j in range(i, d):
            total += abs(diff[i, j]) ** 2
    return math.sqrt(total)


def deviation(g: GramMatrix) -> float:
    """Distance from the balanced matrix over the upper triangle + diagonal.

    ``sqrt(sum_{i <= j} |G[i, j] - delta_ij / d|^2)``; zero exactly when the
    matrix is 1/d times the identity.
    """
    return deviation_from_entries(g.entries)


def max_deviation(d: int) -> float:
    """Largest deviation over unit-trace PSD matrices: sqrt(1 - 1/d).

    Attained by a matrix with a single unit diagonal entry; follows from
    ``||G||_F <= tr G`` for PSD matrices plus the diagonal-sum constraint.
    """
    return math.sqrt(1.0 - 1.0 / d)


# --- two-dimensional closed form --------------------------------------------

@dataclass(frozen=True)
class D2Params:
    """Parameters (p, sigma) of the 2x2 Gram matrix [[p, sigma*], [sigma, 1-p]].

    Feasibility requires ``0 <= p <= 1`` and ``|sigma|^2 <= p (1 - p)`` (up to
    ``TOL_FEASIBLE`` slack); violation raises :class:`InfeasibleParams`.
    """

    p: float
    sigma: complex

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0):
            raise InfeasibleParams(f"p={self.p!r} outside [0, 1]")
        if abs(self.sigma) ** 2 > self.p * (1.0 - self.p) + numerics.TOL_FEASIBLE:
            raise InfeasibleParams(
                f"|sigma|^2 = {abs(self.sigma)**2:.6g} exceeds p(1-p) = "
                f"{self.p * (1.0 - self.p):.6g}"
            )

    def entries(self) -> np.ndarray:
        return np.array(
            [[self.p, np.conj(self.sigma)], [self.sigma, 1.0 - self.p]],
            dtype=np.complex128,
        )


def d2_closed_form(params: D2Params) -> tuple[float, float]:
    """Eigenvalue pair ((1 - sqrt(disc))/2, (1 + sqrt(disc))/2) of a 2x2 Gram.

    ``disc = 1 - 4 (p - p^2 - |sigma|^2)``; roundoff within ``TOL_FEASIBLE``
    of the [0, 1] range is clamped, anything farther out is infeasible.
    """
    disc = 1.0 - 4.0 * (params.p - params.p**2 - abs(params.sigma) ** 2)
    if disc < 0.0:
        if disc < -numerics.TOL_FEASIBLE:
            raise InfeasibleParams(f"discriminant {disc:.6g} below 0")
        disc = 0.0
    if disc > 1.0:
        if disc > 1.0 + numerics.TOL_FEASIBLE:
            raise InfeasibleParams(f"discriminant {disc:.6g} above 1")
        disc = 1.0
    root = math.sqrt(disc)
    return ((1.0 - root) / 2.0, (1.0 + root) / 2.0)


def d2_deviation(params: D2Params) -> float:
    """Deviation of the 2x2 matrix built from (p, sigma)."""
    return deviation_from_entries(params.entries())


# --- per-state report --------------------------------------------------------

@dataclass(frozen=True)
class EntanglementReport:
    """Everything the analyzer computes for one state."""

    entropy: float
    max_entropy: float
    base: str
    deviation: float
    spectrum: tuple[float, ...]
    schmidt_rank: int
    maximal: bool


def analyze(state: PureState, base: str = "e") -> EntanglementReport:
    """Full entanglement report for a unit-norm state.

    ``maximal`` is declared exactly when the deviation is at most
    ``TOL_MAXIMAL``; the spectrum is the Gram eigenvalue list in
    non-increasing order; the rank counts eigenvalues whose square roots
    exceed ``TOL_SCHMIDT``.
    """
    _check_base(base)
    g = gram_from_state(state)
    eigs = numerics.eigh(g.entries).eigenvalues
    ent = entropy_from_eigenvalues(eigs, base)
    dev = deviation(g)
    rank = int(np.sum(np.sqrt(np.maximum(eigs, 0.0)) > numerics.TOL_SCHMIDT))
    return EntanglementReport(
        entropy=ent,
        max_entropy=max_entropy(state.d, base),
        base=base,
        deviation=dev,
        spectrum=tuple(float(w) for w in eigs),
        schmidt_rank=rank,
        maximal=dev <= numerics.TOL_MAXIMAL,
    )


def report_to_json(report: EntanglementReport) -> dict:
    return {
        "entropy": report.entropy,
        "max_entropy": report.max_entropy,
        "base": report.base,
        "deviation": report.deviation,
        "spectrum": list(report.spectrum),
        "schmidt_rank": report.schmidt_rank,
        "maximal": report.maximal,
    }

"""Gram matrices of state components and the 4x4 membership test.

The Gram matrix of a state collects the pairwise inner products of its
component vectors: ``G[i, j] = <component_i | component_j>`` with the inner
product conjugate-linear in the FIRST argument, i.e.
``G[i, j] = sum_k conj(c[i, k]) * c[j, k]``.  For a unit-norm state G is
Hermitian, positive semidefinite, and has unit trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import numerics
from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotHermitian,
    NotPSD,
    ShapeMismatch,
)
from .state import PureState

__all__ = [
    "GramMatrix",
    "gram_from_entries",
    "gram_from_state",
    "gram_from_vectors",
    "rank",
    "realize",
    "is_invariant_under",
    "G4Verdict",
    "check_g4_membership",
    "gram_to_json",
    "gram_from_json",
]


@dataclass(frozen=True)
class GramMatrix:
    """Validated Hermitian PSD matrix of component inner products."""

    d: int
    entries: np.ndarray

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def gram_from_entries(entries) -> GramMatrix:
    """Wrap and validate an explicit Hermitian PSD array as a Gram matrix."""
    arr = np.asarray(entries, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ShapeMismatch(f"Gram matrix must be square, got shape {arr.shape}")
    defect = numerics.hermitian_defect(arr)
    if defect > numerics.TOL_HERMITIAN:
        raise NotHermitian(f"Gram matrix asymmetry {defect:.3e} exceeds tolerance")
    arr = (arr + arr.conj().T) / 2.0
    smallest = float(numerics.eigh(arr).eigenvalues[-1])
    if smallest < numerics.TOL_PSD:
        raise NotPSD(f"smallest eigenvalue {smallest:.3e} is below {numerics.TOL_PSD:.1e}")
    arr.setflags(write=False)
    return GramMatrix(d=arr.shape[0], entries=arr)


def gram_from_state(state: PureState) -> GramMatrix:
    """Gram matrix of a state's component vectors (rows of its coefficients)."""
    c = state.coeffs
    return gram_from_entries(np.conj(c) @ c.T)


def gram_from_vectors(vectors) -> GramMatrix:
    """Gram matrix of an explicit list of equal-length complex vectors."""
    if len(vectors) < 1:
        raise DimensionMismatch("need at least one vector")
    rows = [np.asarray(v, dtype=np.complex128) for v in vectors]
    length = rows[0].shape
    if len(length) != 1:
        raise DimensionMismatch(f"vectors must be 1-d, got shape {length}")
    for i, row in enumerate(rows):
        if row.shape != length:
            raise DimensionMismatch(
                f"vector {i} has length {row.shape[0]}, expected {length[0]}"
            )
    mat = np.vstack(rows)
    return gram_from_entries(np.conj(mat) @ mat.T)


def rank(g: GramMatrix, tol: float = numerics.TOL_RANK) -> int:
    """Number of eigenvalues above ``tol`` = dimension spanned by the vectors."""
    return int(np.sum(numerics.eigh(g.entries).eigenvalues > tol))


def realize(g: GramMatrix) -> list[np.ndarray]:
    """Vectors in C^d whose Gram matrix is ``g``.

    Rows of the (entrywise conjugated) Cholesky factor.  The conjugation
    matters: with the inner product conjugate-linear in its first argument,
    the Gram matrix of the raw rows of ``B`` (where ``g = B B^H``) would be
    ``conj(g)``; conjugating the rows restores ``g`` itself.  For real
    matrices the two coincide.
    """
    lower = numerics.cholesky_psd(g.entries)
    return [np.conj(lower[i, :]) for i in range(g.d)]


def is_invariant_under(g: GramMatrix, g_after: GramMatrix) -> bool:
    """Whether two Gram matrices agree within the reconstruction tolerance."""
    if g.d != g_after.d:
        raise DimensionMismatch(f"dimension mismatch: {g.d} vs {g_after.d}")
    return numerics.frobenius(g.entries - g_after.entries) <= numerics.TOL_RECON


# --- 4x4 membership ----------------------------------------------------------

_LEADING_SUBSETS = ((0, 1, 2, 3), (0, 1, 2), (0, 1))
"""Leading principal subsets, largest first; always checked and reported first."""


def _all_principal_subsets() -> tuple[tuple[int, ...], ...]:
    rest = [
        s
        for size in (1, 2, 3, 4)
        for s in combinations(range(4), size)
        if s not in _LEADING_SUBSETS
    ]
    return _LEADING_SUBSETS + tuple(rest)


_ALL_SUBSETS = _all_principal_subsets()


def _det_cofactor(a: np.ndarray) -> complex:
    """Determinant by cofactor expansion along the first row (exact, small n)."""
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    if n == 2:
        return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    total = 0.0 + 0.0j
    sign = 1.0
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += sign * a[0, j] * _det_cofactor(minor)
        sign = -sign
    return complex(total)


def principal_minor(a: np.ndarray, subset: tuple[int, ...]) -> float:
    """Real part of the determinant of a principal submatrix."""
    idx = np.array(subset)
    return _det_cofactor(a[np.ix_(idx, idx)]).real


@dataclass(frozen=True)
class G4Verdict:
    """Outcome of the 4x4 membership check.

    ``failed`` lists an identifier per violated constraint, leading principal
    minors before the others; ``values`` holds every checked quantity.
    """

    is_member: bool
    failed: tuple[str, ...]
    values: dict = field(default_factory=dict)


def check_g4_membership(matrix, minors: str = "all") -> G4Verdict:
    """Decide whether a 4x4 Hermitian matrix is a Gram matrix of a unit state.

    Checks unit trace, diagonal entries in [0, 1], and positive
    semidefiniteness via principal minors computed by exact cofactor
    expansion.  ``minors="all"`` tests all 15 principal minors (the complete
    criterion); ``minors="leading"`` tests only the three leading ones of
    orders 4, 3, 2 — kept as a separate mode because the leading-only variant
    provably misses matrices with zero pivots (see the test suite for a
    witness).
    """
    if minors not in ("all", "leading"):
        raise InvalidInput("minors", f"expected 'all' or 'leading', got {minors!r}")
    arr = np.asarray(matrix, dtype=np.complex128)
    if arr.shape != (4, 4):
        raise ShapeMismatch(f"membership check needs a 4x4 matrix, got {arr.shape}")
    defect = numerics.hermitian_defect(arr)
    if defect > numerics.TOL_HERMITIAN:
        raise NotHermitian(f"matrix asymmetry {defect:.3e} exceeds tolerance")
    arr = (arr + arr.conj().T) / 2.0

    failed: list[str] = []
    values: dict = {}

    trace = float(np.trace(arr).real)
    values["trace"] = trace
    if abs(trace - 1.0) > numerics.TOL_TRACE:
        failed.append("trace")
    for i in range(4):
        diag = float(arr[i, i].real)
        values[f"diagonal[{i}]"] = diag
        if diag < numerics.TOL_PSD or diag > 1.0 - numerics.TOL_PSD:
            failed.append(f"diagonal-range[{i}]")

    subsets = _LEADING_SUBSETS if minors == "leading" else _ALL_SUBSETS
    for subset in subsets:
        label = "minor(" + ",".join(str(i) for i in subset) + ")"
        value = principal_minor(arr, subset)
        values[label] = value
        if value < numerics.TOL_PSD:
            failed.append(label)

    return G4Verdict(is_member=not failed, failed=tuple(failed), values=values)


# --- JSON form ---------------------------------------------------------------

def gram_to_json(g: GramMatrix) -> dict:
    return {
        "d": g.d,
        "entries": [
            [[float(z.real), float(z.imag)] for z in row] for row in g.entries
        ],
    }


def gram_from_json(data: dict) -> GramMatrix:
    if not isinstance(data, dict):
        raise InvalidInput("root", f"expected a JSON object, got {type(data).__name__}")
    if "d" not in data:
        raise InvalidInput("d", "missing required key")
    if "entries" not in data:
        raise InvalidInput("entries", "missing required key")
    d = data["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidInput("d", f"expected a positive integer, got {d!r}")
    raw = data["entries"]
    if not isinstance(raw, list) or len(raw) != d:
        raise InvalidInput("entries", f"expected {d} rows")
    entries = np.zeros((d, d), dtype=np.complex128)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != d:
            raise InvalidInput("entries", f"row {i} must have {d} entries")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise InvalidInput(
                    "entries", f"entry ({i}, {j}) must be a [re, im] number pair"
                )
            entries[i, j] = complex(pair[0], pair[1])
    return gram_from_entries(entries)

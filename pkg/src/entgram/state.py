"""Bipartite pure states with a finite left side and a truncated right side.

A state lives on C^d tensored with an infinite-dimensional right factor; only
the first ``trunc_dim`` right-basis coefficients are stored.  The coefficient
array has one row per left basis vector: row ``i`` is the component vector
paired with the i-th left basis element, so the squared Frobenius norm of the
array is the squared norm of the state.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotNormalized,
    NotUnitary,
    ShapeMismatch,
    ZeroState,
)

__all__ = [
    "PureState",
    "SchmidtForm",
    "make_state",
    "schmidt_decompose",
    "apply_right_unitary",
    "state_to_json",
    "state_from_json",
    "load_state",
    "save_state",
]


@dataclass(frozen=True)
class PureState:
    """A unit-norm state given by its d x trunc_dim coefficient array."""

    d: int
    trunc_dim: int
    coeffs: np.ndarray
    normalized: bool = True

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def component(self, i: int) -> np.ndarray:
        """Coefficient vector paired with left basis element ``i``."""
        return self.coeffs[i]


def make_state(d: int, trunc_dim: int, coeffs, normalize: bool = True) -> PureState:
    """Validate a coefficient array and wrap it as a :class:`PureState`.

    Parameters
    ----------
    d, trunc_dim : int
        Left dimension and number of retained right-basis coefficients.
    coeffs : array_like
        Complex array of shape ``(d, trunc_dim)``; row i is component i.
    normalize : bool
        When true (default) the array is scaled to unit Frobenius norm.
        When false the caller asserts the array is already normalized, and a
        norm off by more than ``TOL_NORMALIZED`` raises :class:`NotNormalized`.

    Raises
    ------
    ShapeMismatch
        If the array shape is not ``(d, trunc_dim)``.
    ZeroState
        If the norm is below ``TOL_ZERO_STATE`` — nothing to normalize.
    """
    if d < 1 or trunc_dim < 1:
        raise ShapeMismatch(f"dimensions must be positive, got d={d}, trunc_dim={trunc_dim}")
    arr = np.asarray(coeffs, dtype=np.complex128)
    if arr.shape != (d, trunc_dim):
        raise ShapeMismatch(
            f"coefficient array has shape {arr.shape}, expected ({d}, {trunc_dim})"
        )
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise InvalidInput("coeffs", "coefficient array contains non-finite entries")
    norm = math.sqrt(float(np.sum(np.abs(arr) ** 2)))
    if norm < numerics.TOL_ZERO_STATE:
        raise ZeroState(f"state norm {norm:.3e} is numerically zero")
    if normalize:
        arr = arr / norm
    elif abs(norm - 1.0) > numerics.TOL_NORMALIZED:
        raise NotNormalized(
            f"normalize=False requires unit norm, got norm {norm:.15g}"
        )
    else:
        arr = arr.copy()
    arr.setflags(write=False)
    return PureState(d=d, trunc_dim=trunc_dim, coeffs=arr, normalized=True)


@dataclass(frozen=True)
class SchmidtForm:
    """Biorthogonal expansion of a state.

    ``coefficients`` are non-negative and non-increasing (length d); column k
    of ``left_vectors`` (d x d) and column k of ``right_vectors``
    (trunc_dim x r) pair with ``coefficients[k]``.  Only coefficients above
    ``TOL_SCHMIDT`` get a right vector, so ``r`` is the Schmidt rank.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def rank(self) -> int:
        return self.right_vectors.shape[1]

    def reconstruct(self) -> np.ndarray:
        """Coefficient array rebuilt from the retained terms."""
        r = self.rank
        out = np.zeros(
            (self.left_vectors.shape[0], self.right_vectors.shape[0]),
            dtype=np.complex128,
        )
        for k in range(r):
            out += self.coefficients[k] * np.outer(
                self.left_vectors[:, k], self.right_vectors[:, k]
            )
        return out


def schmidt_decompose(state: PureState) -> SchmidtForm:
    """Schmidt form of a state via the spectrum of its reduced matrix.

    The left vectors are eigenvectors of the d x d reduced matrix
    ``C @ C^H``; the coefficients are the square roots of its eigenvalues; the
    right vector for each coefficient above ``TOL_SCHMIDT`` is
    ``(1/coeff) * sum_i conj(left[i]) * component_i``.  Left vectors follow
    the first-nonzero-entry-real-positive phase convention, which pins the
    right vectors as well.
    """
    c = state.coeffs
    reduced = c @ c.conj().T
    res = numerics.eigh(reduced)
    eigs = np.where(
        (res.eigenvalues < 0.0) & (res.eigenvalues >= numerics.TOL_PSD),
        0.0,
        res.eigenvalues,
    )
    coefficients = np.sqrt(np.maximum(eigs, 0.0))
    keep = coefficients > numerics.TOL_SCHMIDT
    r = int(np.sum(keep))
    right = np.zeros((state.trunc_dim, r), dtype=np.complex128)
    for k in range(r):
        right[:, k] = (c.T @ np.conj(res.eigenvectors[:, k])) / coefficients[k]
    coefficients.setflags(write=False)
    return SchmidtForm(
        coefficients=coefficients,
        left_vectors=res.eigenvectors,
        right_vectors=right,
    )


def apply_right_unitary(state: PureState, u) -> PureState:
    """Rotate every component vector by the same unitary on the right factor."""
    mat = np.asarray(u, dtype=np.complex128)
    if mat.shape != (state.trunc_dim, state.trunc_dim):
        raise DimensionMismatch(
            f"unitary has shape {mat.shape}, expected "
            f"({state.trunc_dim}, {state.trunc_dim})"
        )
    defect = numerics.frobenius(mat.conj().T @ mat - np.eye(state.trunc_dim))
    if defect > numerics.TOL_UNITARY:
        raise NotUnitary(f"||U^H U - I||_F = {defect:.3e} exceeds tolerance")
    # Row i of the coefficient array transforms as component_i -> U component_i.
    new_coeffs = state.coeffs @ mat.T
    new_coeffs.setflags(write=False)
    return PureState(
        d=state.d,
        trunc_dim=state.trunc_dim,
        coeffs=new_coeffs,
        normalized=state.normalized,
    )


# --- JSON form ---------------------------------------------------------------

def _complex_array_to_pairs(arr: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in arr]


def state_to_json(state: PureState) -> dict:
    """Plain-dict form: coefficients as [re, im] pairs, row-major."""
    return {
        "d": state.d,
        "trunc_dim": state.trunc_dim,
        "coeffs": _complex_array_to_pairs(state.coeffs),
        "normalized": bool(state.normalized),
    }


def _require_key(data: dict, key: str):
    if key not in data:
        raise InvalidInput(key, "missing required key")
    return data[key]


def state_from_json(data: dict) -> PureState:
    """Rebuild a state from its dict form, naming the offending field on error."""
    if not isinstance(data, dict):
        raise InvalidInput("root", f"expected a JSON object, got {type(data).__name__}")
    d = _require_key(data, "d")
    trunc_dim = _require_key(data, "trunc_dim")
    raw = _require_key(data, "coeffs")
    normalized = _require_key(data, "normalized")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidInput("d", f"expected a positive integer, got {d!r}")
    if not isinstance(trunc_dim, int) or isinstance(trunc_dim, bool) or trunc_dim < 1:
        raise InvalidInput("trunc_dim", f"expected a positive integer, got {trunc_dim!r}")
    if not isinstance(normalized, bool):
        raise InvalidInput("normalized", f"expected a boolean, got {normalized!r}")
    if not isinstance(raw, list) or len(raw) != d:
        raise InvalidInput("coeffs", f"expected {d} rows")
    coeffs = np.zeros((d, trunc_dim), dtype=np.complex128)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != trunc_dim:
            raise InvalidInput("coeffs", f"row {i} must have {trunc_dim} entries")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise InvalidInput(
                    "coeffs", f"entry ({i}, {j}) must be a [re, im] number pair"
                )
            coeffs[i, j] = complex(pair[0], pair[1])
    # Stored states are normalized; re-normalizing here washes out the rounding
    # introduced by fixed-precision serialization.  ZeroState still surfaces.
    return make_state(d, trunc_dim, coeffs, normalize=True)


def save_state(state: PureState, path) -> None:
    from .serialize import dump_json  # local import: serialize has no deps on us

    dump_json(state_to_json(state), path)


def load_state(path) -> PureState:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput("file", f"not valid JSON: {exc}") from exc
    return state_from_json(data)

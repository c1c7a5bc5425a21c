"""Self-contained dense linear algebra for small complex Hermitian problems.

Everything here is hand-rolled on top of plain numpy array arithmetic: the
eigensolver is a cyclic two-sided Jacobi iteration, the singular values come
from an algorithmically unrelated one-sided row-orthogonalization loop, and the
semidefinite Cholesky clamps tiny pivots instead of failing on them.  Keeping
two independent decomposition routes lets higher layers cross-validate spectra
without trusting a single code path.

All numeric thresholds used anywhere in the package live in the table below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPSD, ShapeMismatch

__all__ = [
    "HermitianEigenResult",
    "eigh",
    "eigenvalues_batch",
    "cholesky_psd",
    "singular_values",
    "random_unitary",
    "frobenius",
    "hermitian_defect",
]

# --- central tolerance table -------------------------------------------------
TOL_HERMITIAN = 1e-12    # max-abs deviation from A == A^H before rejection
TOL_ORTHO = 1e-10        # orthonormality defect allowed for basis matrices
TOL_RECON = 1e-10        # relative factorization-residual bound
TOL_PSD = -1e-10         # most negative pivot/eigenvalue/minor still accepted
TOL_PIVOT_CLAMP = 1e-12  # Cholesky pivots below this are treated as exact zeros
TOL_RANK = 1e-10         # eigenvalues above this count toward the rank
TOL_OFFDIAG = 1e-13      # relative off-diagonal mass at which sweeps stop
MAX_SWEEPS = 100         # sweep cap before NoConvergence
TOL_UNITARY = 1e-10      # ||U^H U - I||_F bound for "unitary enough"
TOL_TRACE = 1e-10        # |tr - 1| bound for unit-trace preconditions
TOL_ZERO_EIG = 1e-14     # spectrum weights at/below this contribute 0 entropy
TOL_ZERO_STATE = 1e-14   # norms below this mean "the zero vector"
TOL_NORMALIZED = 1e-12   # |norm - 1| allowed when normalization is disabled
TOL_SCHMIDT = 1e-10      # Schmidt coefficients above this count toward rank
TOL_FEASIBLE = 1e-12     # slack on closed-form feasibility boundaries
TOL_MAXIMAL = 1e-10      # deviation at/below this counts as exactly balanced
TOL_SEED_DISTINCT = 1e-3 # two independent random unitaries must differ by this
TOL_CONJECTURE = 1e-9    # entropy within this of log d counts as "reached the top"
TOL_CONSTRAINT = 1e-9    # allowed shortfall on the optimizer's deviation floor


def frobenius(a: np.ndarray) -> float:
    """Frobenius norm, as a plain float."""
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def _as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeMismatch(
            f"{name} must be a 2-d array with positive dimensions, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def hermitian_defect(a: np.ndarray) -> float:
    """Max-abs difference between a matrix and its conjugate transpose."""
    return float(np.max(np.abs(a - a.conj().T)))


def _offdiag_norm(a: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part, summed directly.

    Computed entry-wise (not as ||A||^2 - ||diag||^2, which cancels
    catastrophically once the off-diagonal mass is tiny).
    """
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.sqrt(np.sum(np.abs(a[mask]) ** 2)))


def _require_hermitian(a, name: str = "matrix") -> np.ndarray:
    arr = _as_complex_matrix(a, name)
    n, m = arr.shape
    if n != m:
        raise ShapeMismatch(f"{name} must be square, got shape {arr.shape}")
    defect = hermitian_defect(arr)
    if defect > TOL_HERMITIAN:
        raise NotHermitian(
            f"{name} is not Hermitian: max |A - A^H| entry is {defect:.3e}"
        )
    # Work on the exactly-Hermitian average so roundoff in the input cannot
    # leak asymmetry into the iteration.
    return (arr + arr.conj().T) / 2.0


@dataclass(frozen=True)
class HermitianEigenResult:
    """Spectral decomposition A = V diag(w) V^H.

    ``eigenvalues`` is real and non-increasing; column ``k`` of
    ``eigenvectors`` belongs to ``eigenvalues[k]``.  Each column is scaled so
    its first entry of non-negligible magnitude is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _phase_fix_columns(v: np.ndarray) -> np.ndarray:
    """Rotate each column so its first non-negligible entry is real positive."""
    v = v.copy()
    n = v.shape[0]
    for k in range(v.shape[1]):
        col = v[:, k]
        scale = np.max(np.abs(col))
        if scale == 0.0:
            continue
        for i in range(n):
            if abs(col[i]) > 1e-12 * scale:
                phase = col[i] / abs(col[i])
                v[:, k] = col * np.conj(phase)
                break
    return v


def eigh(matrix) -> HermitianEigenResult:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix, Hermitian to within ``TOL_HERMITIAN``.

    Returns
    -------
    HermitianEigenResult
        Real eigenvalues in non-increasing order with matching unitary
        eigenvector columns.

    Raises
    ------
    NotHermitian
        If the input deviates from its conjugate transpose beyond tolerance.
    NoConvergence
        If the off-diagonal mass is not driven below
        ``TOL_OFFDIAG * ||A||_F`` within ``MAX_SWEEPS`` sweeps.
    """
    a = _require_hermitian(matrix)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    norm = frobenius(a)
    if norm == 0.0 or n == 1:
        w = np.real(np.diag(a)).copy()
        order = np.argsort(-w, kind="stable")
        return HermitianEigenResult(w[order], v[:, order])

    off_target = TOL_OFFDIAG * norm
    # Rotations on elements already far below the target are pure churn.
    skip_below = off_target / (2.0 * n)

    converged = False
    for _ in range(MAX_SWEEPS):
        off = _offdiag_norm(a)
        if off <= off_target:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                ab = abs(b)
                if ab <= skip_below:
                    continue
                phase = b / ab
                tau = (a[q, q].real - a[p, p].real) / (2.0 * ab)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * np.conj(phase)
                # A <- J^H A J with the rotation acting on rows/columns p, q.
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - spc * col_q
                a[:, q] = sp * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sp * row_q
                a[q, :] = spc * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - spc * vec_q
                v[:, q] = sp * vec_p + c * vec_q
    if not converged:
        off = _offdiag_norm(a)
        if off > off_target:
            raise NoConvergence(
                f"Jacobi eigensolver: off-diagonal norm {off:.3e} above target "
                f"{off_target:.3e} after {MAX_SWEEPS} sweeps"
            )
    w = np.real(np.diag(a)).copy()
    order = np.argsort(-w, kind="stable")
    return HermitianEigenResult(w[order], _phase_fix_columns(v[:, order]))


def eigenvalues_batch(matrices) -> np.ndarray:
    """Eigenvalues of a stack of Hermitian matrices, each row non-increasing.

    Same cyclic Jacobi iteration as :func:`eigh`, vectorized across the first
    axis and without eigenvector accumulation; meant for hot loops that only
    need spectra (sampling sweeps, numerical gradients).  Input shape
    ``(B, n, n)``; output shape ``(B, n)``.
    """
    a = np.array(matrices, dtype=np.complex128)
    if a.ndim != 3 or a.shape[1] != a.shape[2] or a.shape[1] < 1:
        raise ShapeMismatch(f"expected a (B, n, n) stack, got shape {a.shape}")
    batch, n = a.shape[0], a.shape[1]
    if batch == 0:
        return np.zeros((0, n))
    defect = float(np.max(np.abs(a - np.conj(np.transpose(a, (0, 2, 1))))))
    if defect > TOL_HERMITIAN:
        raise NotHermitian(
            f"stack is not Hermitian: max |A - A^H| entry is {defect:.3e}"
        )
    a = (a + np.conj(np.transpose(a, (0, 2, 1)))) / 2.0
    if n == 1:
        return np.real(a[:, :, 0]).copy()

    mask_off = ~np.eye(n, dtype=bool)
    norms = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    off_target = TOL_OFFDIAG * norms
    skip_below = off_target / (2.0 * n)

    converged = False
    for _ in range(MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(a[:, mask_off]) ** 2, axis=1))
        active = off > off_target
        if not np.any(active):
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[:, p, q]
                ab = np.abs(b)
                rotate = active & (ab > skip_below)
                if not np.any(rotate):
                    continue
                safe_ab = np.where(ab > 0.0, ab, 1.0)
                phase = np.where(ab > 0.0, b / safe_ab, 1.0 + 0.0j)
                tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe_ab)
                t = np.where(
                    tau == 0.0,
                    1.0,
                    np.sign(tau) / (np.abs(tau) + np.sqrt(1.0 + tau * tau)),
                )
                t = np.where(rotate, t, 0.0)  # identity rotation elsewhere
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * np.conj(phase)
                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * col_p - spc[:, None] * col_q
                a[:, :, q] = sp[:, None] * col_p + c[:, None] * col_q
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * row_p - sp[:, None] * row_q
                a[:, q, :] = spc[:, None] * row_p + c[:, None] * row_q
                a[:, p, q] = np.where(rotate, 0.0, a[:, p, q])
                a[:, q, p] = np.where(rotate, 0.0, a[:, q, p])
                a[:, p, p] = a[:, p, p].real
                a[:, q, q] = a[:, q, q].real
    if not converged:
        off = np.sqrt(np.sum(np.abs(a[:, mask_off]) ** 2, axis=1))
        worst = int(np.argmax(off - off_target))
        if off[worst] > off_target[worst]:
            raise NoConvergence(
                f"Jacobi eigensolver (batched): matrix {worst} off-diagonal norm "
                f"{off[worst]:.3e} above target {off_target[worst]:.3e} after "
                f"{MAX_SWEEPS} sweeps"
            )
    eigs = np.real(a[:, np.arange(n), np.arange(n)])
    return -np.sort(-eigs, axis=1)


def cholesky_psd(matrix) -> np.ndarray:
    """Lower-triangular B with ``matrix == B @ B^H`` for PSD Hermitian input.

    Pivots below ``TOL_PIVOT_CLAMP`` are treated as exact zeros and their
    columns zeroed, so rank-deficient matrices factor cleanly.  A pivot below
    ``TOL_PSD`` means the matrix is not positive semidefinite.
    """
    g = _require_hermitian(matrix)
    n = g.shape[0]
    lower = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        pivot = g[j, j].real - float(np.sum(np.abs(lower[j, :j]) ** 2))
        if pivot < TOL_PSD:
            raise NotPSD(f"pivot {pivot:.3e} at column {j} is below {TOL_PSD:.1e}")
        if pivot < TOL_PIVOT_CLAMP:
            continue  # treat as exact zero; column stays zero
        diag = math.sqrt(pivot)
        lower[j, j] = diag
        if j + 1 < n:
            lower[j + 1 :, j] = (
                g[j + 1 :, j] - lower[j + 1 :, :j] @ np.conj(lower[j, :j])
            ) / diag
    return lower


def singular_values(matrix) -> np.ndarray:
    """Singular values of a d x N (d <= N) complex matrix, non-increasing.

    Uses one-sided plane rotations that orthogonalize the *rows* of the input;
    the singular values are the final row norms.  This shares no code with
    :func:`eigh`, so agreement between the two is a genuine cross-check.
    """
    c = _as_complex_matrix(matrix)
    d, n = c.shape
    if d > n:
        raise ShapeMismatch(
            f"matrix must have at least as many columns as rows, got shape {c.shape}"
        )
    m = c.copy()
    scale = float(np.sum(np.abs(m) ** 2))  # == trace of the row Gram matrix
    if scale == 0.0:
        return np.zeros(d)
    off_target = TOL_OFFDIAG * scale
    skip_below = off_target / (2.0 * d) if d > 1 else 0.0

    converged = d == 1
    for _ in range(MAX_SWEEPS):
        if d == 1:
            break
        cross = np.conj(m) @ m.T  # row inner products <row_i | row_j>
        off = _offdiag_norm(cross)
        if off <= off_target:
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                gamma = complex(np.vdot(m[p], m[q]))
                ag = abs(gamma)
                if ag <= skip_below:
                    continue
                alpha = float(np.sum(np.abs(m[p]) ** 2))
                beta = float(np.sum(np.abs(m[q]) ** 2))
                omega = gamma / ag
                tau = (beta - alpha) / (2.0 * ag)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                cc = 1.0 / math.sqrt(1.0 + t * t)
                ss = t * cc
                row_p = m[p].copy()
                row_q = m[q].copy()
                m[p] = cc * row_p - ss * np.conj(omega) * row_q
                m[q] = ss * omega * row_p + cc * row_q
    if not converged:
        cross = np.conj(m) @ m.T
        off = _offdiag_norm(cross)
        if off > off_target:
            raise NoConvergence(
                f"one-sided orthogonalization: off-diagonal norm {off:.3e} above "
                f"target {off_target:.3e} after {MAX_SWEEPS} sweeps"
            )
    values = np.sqrt(np.sum(np.abs(m) ** 2, axis=1))
    return np.sort(values)[::-1].copy()


def random_unitary(n: int, seed) -> np.ndarray:
    """Draw an n x n unitary, uniformly with respect to left/right rotation.

    A complex Gaussian matrix is orthonormalized column by column
    (modified Gram-Schmidt with one re-orthogonalization pass); because each
    column is scaled by its positive real norm, no extra phase correction is
    needed for the draw to be rotation invariant.
    """
    if n < 1:
        raise ShapeMismatch(f"unitary dimension must be positive, got {n}")
    rng = np.random.default_rng(seed)
    q = np.empty((n, n), dtype=np.complex128)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    for j in range(n):
        vec = z[:, j].copy()
        while True:
            for _ in range(2):  # second pass scrubs roundoff from the first
                for i in range(j):
                    vec -= np.vdot(q[:, i], vec) * q[:, i]
            norm = float(np.sqrt(np.sum(np.abs(vec) ** 2)))
            if norm > 1e-12:
                break
            vec = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)
        q[:, j] = vec / norm
    return q

"""Numerical kernels validated against numpy.linalg as an independent oracle.

Known values:
- identity: all eigenvalues 1, all singular values 1
- diagonal matrices: eigenvalues = diagonal entries
- rank-1 projectors: a single nonzero eigenvalue
"""

import numpy as np
import pytest

from entgram.errors import NotHermitian, NotPSD
from entgram.numerics import (
    cholesky_psd,
    eigenvalues_batch,
    eigh,
    frobenius,
    random_unitary,
    singular_values,
)


def random_hermitian(d, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2.0


class TestEigh:
    def test_identity(self):
        res = eigh(np.eye(4, dtype=complex))
        np.testing.assert_allclose(res.eigenvalues, np.ones(4), atol=1e-14)

    def test_diagonal(self):
        vals = np.array([3.0, -1.0, 2.0, 0.5])
        res = eigh(np.diag(vals).astype(complex))
        np.testing.assert_allclose(res.eigenvalues, sorted(vals, reverse=True), atol=1e-14)

    def test_rank_one_projector(self):
        v = np.array([1.0, 2.0, 2.0]) / 3.0
        res = eigh(np.outer(v, v).astype(complex))
        np.testing.assert_allclose(res.eigenvalues, [1.0, 0.0, 0.0], atol=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4, 6, 8])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_matches_numpy(self, d, seed):
        a = random_hermitian(d, seed)
        res = eigh(a)
        expected = np.linalg.eigvalsh(a)[::-1]
        np.testing.assert_allclose(res.eigenvalues, expected, atol=1e-10)

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_reconstruction_and_orthonormality(self, d):
        a = random_hermitian(d, seed=99)
        res = eigh(a)
        v = res.eigenvectors
        np.testing.assert_allclose(v.conj().T @ v, np.eye(d), atol=1e-10)
        recon = v @ np.diag(res.eigenvalues) @ v.conj().T
        np.testing.assert_allclose(recon, a, atol=1e-10)

    def test_eigenvalues_descending(self):
        res = eigh(random_hermitian(6, seed=5))
        assert all(x >= y for x, y in zip(res.eigenvalues, res.eigenvalues[1:]))

    def test_phase_convention_first_entry_real(self):
        res = eigh(random_hermitian(5, seed=7))
        for k in range(5):
            col = res.eigenvectors[:, k]
            lead = col[np.argmax(np.abs(col) > 1e-8)]
            assert abs(lead.imag) < 1e-10
            assert lead.real > 0

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


class TestEigenvaluesBatch:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_matches_scalar_path(self, d):
        rng = np.random.default_rng(11)
        stack = []
        for _ in range(50):
            a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            stack.append((a + a.conj().T) / 2.0)
        batch = eigenvalues_batch(np.array(stack))
        for i, a in enumerate(stack):
            np.testing.assert_allclose(batch[i], eigh(a).eigenvalues, atol=1e-10)

    def test_identity_batch(self):
        batch = eigenvalues_batch(np.broadcast_to(np.eye(3, dtype=complex), (7, 3, 3)).copy())
        np.testing.assert_allclose(batch, np.ones((7, 3)), atol=1e-14)


class TestSingularValues:
    @pytest.mark.parametrize("shape", [(2, 8), (3, 8), (4, 64), (4, 4)])
    @pytest.mark.parametrize("seed", [0, 3])
    def test_matches_numpy(self, shape, seed):
        rng = np.random.default_rng(seed)
        m = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        np.testing.assert_allclose(
            singular_values(m), np.linalg.svd(m, compute_uv=False), atol=1e-10
        )

    def test_unitary_rows_give_unit_values(self):
        u = random_unitary(4, seed=2)
        np.testing.assert_allclose(singular_values(u), np.ones(4), atol=1e-10)

    def test_rank_deficient(self):
        m = np.array([[1.0, 2.0, 0.0], [2.0, 4.0, 0.0]], dtype=complex)
        vals = singular_values(m)
        assert vals[0] == pytest.approx(5.0, abs=1e-10)
        assert abs(vals[1]) < 1e-10


class TestCholeskyPSD:
    @pytest.mark.parametrize("d", [2, 3, 4, 6])
    def test_factorization(self, d):
        rng = np.random.default_rng(d)
        b = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        a = b @ b.conj().T
        low = cholesky_psd(a)
        assert np.allclose(np.triu(low, 1), 0.0)
        np.testing.assert_allclose(low @ low.conj().T, a, atol=1e-10)

    def test_rank_deficient(self):
        v = np.array([1.0, 1.0, 0.0], dtype=complex)
        a = np.outer(v, v.conj())
        low = cholesky_psd(a)
        np.testing.assert_allclose(low @ low.conj().T, a, atol=1e-12)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            cholesky_psd(np.diag([1.0, -0.5]).astype(complex))


class TestRandomUnitary:
    @pytest.mark.parametrize("d", [2, 3, 4, 8])
    def test_unitarity(self, d):
        u = random_unitary(d, seed=17)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(d), atol=1e-10)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(d), atol=1e-10)

    def test_deterministic_per_seed(self):
        assert np.array_equal(random_unitary(4, seed=5), random_unitary(4, seed=5))

    def test_distinct_across_seeds(self):
        assert frobenius(random_unitary(4, seed=5) - random_unitary(4, seed=6)) > 1e-3

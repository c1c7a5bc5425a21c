"""Entropy, deviation, the 2x2 closed form, and state reports.

Frozen oracle values (computed once from the defining formulas):
- eigenvalues at (p, sigma) = (0.3, 0.2): (0.217157287525381, 0.782842712474619)
- entropy there (natural log): 0.5232864164263098
- deviation of diag(1, 0): 0.7071067811865476
- deviation of [[1/2, 1/2], [1/2, 1/2]]: 0.5
"""

import math

import numpy as np
import pytest

from entgram.entangle import (
    D2Params,
    analyze,
    d2_closed_form,
    d2_deviation,
    deviation,
    deviation_from_entries,
    entropy,
    entropy_from_eigenvalues,
    max_deviation,
    max_entropy,
    report_to_json,
)
from entgram.errors import (
    InfeasibleParams,
    NegativeEigenvalue,
    TraceNotOne,
)
from entgram.gram import gram_from_entries, gram_from_state
from entgram.numerics import random_unitary
from entgram.state import apply_right_unitary, make_state
from entgram.explore import random_state

INV_SQRT2 = 1.0 / math.sqrt(2.0)


class TestEntropyFromEigenvalues:
    @pytest.mark.parametrize("d", [2, 3, 4, 8])
    def test_uniform_gives_log_d(self, d):
        assert entropy_from_eigenvalues([1.0 / d] * d) == pytest.approx(
            math.log(d), abs=1e-14
        )

    def test_pure_spectrum_gives_zero(self):
        assert entropy_from_eigenvalues([1.0, 0.0]) == 0.0

    def test_tiny_weights_contribute_nothing(self):
        assert entropy_from_eigenvalues([1.0, 1e-15]) == 0.0

    def test_base_two(self):
        assert entropy_from_eigenvalues([0.5, 0.5], base="2") == pytest.approx(
            1.0, abs=1e-14
        )

    def test_negative_weight_rejected(self):
        with pytest.raises(NegativeEigenvalue):
            entropy_from_eigenvalues([1.1, -0.1])

    def test_small_negative_clamped(self):
        assert entropy_from_eigenvalues([1.0, -1e-12]) == 0.0


class TestEntropyOfGram:
    def test_balanced(self):
        g = gram_from_entries(np.eye(2) / 2.0)
        assert entropy(g) == pytest.approx(math.log(2.0), abs=1e-14)

    def test_requires_unit_trace(self):
        with pytest.raises(TraceNotOne):
            entropy(gram_from_entries(np.eye(2)))

    def test_max_entropy_values(self):
        assert max_entropy(2) == pytest.approx(math.log(2.0))
        assert max_entropy(4, base="2") == pytest.approx(2.0)

    @pytest.mark.parametrize("d,n", [(2, 8), (3, 8), (4, 64)])
    def test_invariant_under_right_rotation(self, d, n):
        st = random_state(d, n, seed=31)
        u = random_unitary(n, seed=32)
        before = entropy(gram_from_state(st))
        after = entropy(gram_from_state(apply_right_unitary(st, u)))
        assert after == pytest.approx(before, abs=1e-10)


class TestDeviation:
    def test_pure_direction(self):
        g = gram_from_entries(np.diag([1.0, 0.0]))
        assert deviation(g) == pytest.approx(0.7071067811865476, abs=1e-15)

    def test_uniform_offdiagonal(self):
        g = gram_from_entries([[0.5, 0.5], [0.5, 0.5]])
        assert deviation(g) == pytest.approx(0.5, abs=1e-15)

    def test_balanced_is_zero(self):
        assert deviation(gram_from_entries(np.eye(4) / 4.0)) == 0.0

    def test_max_deviation_closed_form(self):
        assert max_deviation(2) == pytest.approx(math.sqrt(0.5), abs=1e-15)
        assert max_deviation(4) == pytest.approx(math.sqrt(0.75), abs=1e-15)

    def test_pure_direction_attains_max(self):
        for d in (2, 3, 4):
            m = np.zeros((d, d))
            m[0, 0] = 1.0
            assert deviation_from_entries(m) == pytest.approx(
                max_deviation(d), abs=1e-14
            )

    def test_counts_upper_triangle_with_diagonal(self):
        # diagonal part contributes (p-1/2)^2 twice, off-diagonal |sigma|^2 once
        m = np.array([[0.7, 0.1j], [-0.1j, 0.3]])
        expected = math.sqrt(2 * 0.2**2 + 0.1**2)
        assert deviation_from_entries(m) == pytest.approx(expected, abs=1e-14)


class TestD2ClosedForm:
    def test_frozen_point(self):
        lo, hi = d2_closed_form(D2Params(p=0.3, sigma=0.2))
        assert lo == pytest.approx(0.217157287525381, abs=1e-14)
        assert hi == pytest.approx(0.782842712474619, abs=1e-14)
        ent = entropy_from_eigenvalues([lo, hi])
        assert ent == pytest.approx(0.5232864164263098, abs=1e-14)

    def test_balanced_point(self):
        lo, hi = d2_closed_form(D2Params(p=0.5, sigma=0.0))
        assert (lo, hi) == (pytest.approx(0.5), pytest.approx(0.5))

    def test_complex_sigma_same_modulus(self):
        a = d2_closed_form(D2Params(p=0.4, sigma=0.1 + 0.1j))
        b = d2_closed_form(D2Params(p=0.4, sigma=math.sqrt(0.02)))
        assert a == pytest.approx(b, abs=1e-14)

    def test_feasibility_boundary(self):
        # |sigma|^2 = p(1-p) is the laced edge: eigenvalues (0, 1)
        p = 0.3
        lo, hi = d2_closed_form(D2Params(p=p, sigma=math.sqrt(p * (1 - p))))
        assert lo == pytest.approx(0.0, abs=1e-12)
        assert hi == pytest.approx(1.0, abs=1e-12)

    def test_infeasible_rejected(self):
        with pytest.raises(InfeasibleParams):
            D2Params(p=0.1, sigma=0.5)

    def test_matches_eigensolver_on_coarse_grid(self):
        for p in np.linspace(0.05, 0.95, 10):
            for s in np.linspace(0.0, 0.45, 8):
                if s * s > p * (1 - p):
                    continue
                params = D2Params(p=float(p), sigma=float(s))
                lo, hi = d2_closed_form(params)
                g = gram_from_entries([[p, s], [s, 1 - p]])
                ent_closed = entropy_from_eigenvalues([lo, hi])
                assert entropy(g) == pytest.approx(ent_closed, abs=1e-10)

    def test_d2_deviation_formula(self):
        params = D2Params(p=0.3, sigma=0.2)
        direct = deviation_from_entries(np.array([[0.3, 0.2], [0.2, 0.7]]))
        assert d2_deviation(params) == pytest.approx(direct, abs=1e-14)


class TestAnalyze:
    def test_balanced_diagonal_state(self):
        st = make_state(2, 2, [[INV_SQRT2, 0.0], [0.0, INV_SQRT2]], normalize=False)
        report = analyze(st)
        assert report.maximal
        assert report.entropy == pytest.approx(math.log(2.0), abs=1e-12)
        assert report.deviation <= 1e-14
        assert report.schmidt_rank == 2
        np.testing.assert_allclose(report.spectrum, [0.5, 0.5], atol=1e-12)

    def test_product_state(self):
        st = make_state(2, 2, [[1.0, 0.0], [0.0, 0.0]])
        report = analyze(st)
        assert report.entropy == 0.0
        assert report.schmidt_rank == 1
        assert not report.maximal
        assert report.deviation == pytest.approx(max_deviation(2), abs=1e-14)

    def test_base_two_report(self):
        st = make_state(2, 2, [[INV_SQRT2, 0.0], [0.0, INV_SQRT2]], normalize=False)
        report = analyze(st, base="2")
        assert report.entropy == pytest.approx(1.0, abs=1e-12)
        assert report.max_entropy == pytest.approx(1.0, abs=1e-14)

    def test_report_json_fields(self):
        st = make_state(2, 2, [[INV_SQRT2, 0.0], [0.0, INV_SQRT2]], normalize=False)
        data = report_to_json(analyze(st))
        assert set(data) == {
            "entropy",
            "max_entropy",
            "base",
            "deviation",
            "spectrum",
            "schmidt_rank",
            "maximal",
        }
        assert data["maximal"] is True

"""Gram matrices: construction, realization, invariance, 4x4 membership.

Known values:
- the balanced two-term diagonal state has Gram matrix I/2
- diag(1/2, 1/2, 0, 0) is a rank-deficient member of the 4x4 set
- the block witness below passes the three leading minors yet has a
  negative non-leading principal minor
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entgram.errors import (
    DimensionMismatch,
    InvalidInput,
    NotHermitian,
    NotPSD,
    ShapeMismatch,
)
from entgram.gram import (
    check_g4_membership,
    gram_from_entries,
    gram_from_json,
    gram_from_state,
    gram_from_vectors,
    gram_to_json,
    is_invariant_under,
    principal_minor,
    rank,
    realize,
)
from entgram.numerics import frobenius, random_unitary
from entgram.state import apply_right_unitary, make_state
from entgram.explore import random_gram, random_state

INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Passes the leading minors of orders 2, 3, 4 (all zero or positive) while the
# principal minor on rows/columns (0, 2) is -1/4: zeros on the leading diagonal
# block hide the negative direction from every leading test.
LEADING_BLIND_WITNESS = np.array(
    [
        [0.0, 0.0, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.5],
        [0.5, 0.0, 0.5, 0.0],
        [0.0, 0.5, 0.0, 0.5],
    ],
    dtype=complex,
)


class TestConstruction:
    def test_bell_like_gram_is_balanced(self):
        st_ = make_state(2, 2, [[INV_SQRT2, 0.0], [0.0, INV_SQRT2]], normalize=False)
        g = gram_from_state(st_)
        np.testing.assert_allclose(g.entries, np.eye(2) / 2.0, atol=1e-15)
        assert g.trace() == pytest.approx(1.0, abs=1e-14)

    def test_first_argument_conjugation(self):
        # <v0|v1> with v0 = e1, v1 = i e1 must be +i (conjugation on the left).
        g = gram_from_vectors([[1.0, 0.0], [1j, 0.0]])
        assert g.entries[0, 1] == pytest.approx(1j)
        assert g.entries[1, 0] == pytest.approx(-1j)

    @pytest.mark.parametrize("d,n", [(2, 8), (4, 64)])
    def test_state_gram_is_unit_trace_psd(self, d, n):
        g = gram_from_state(random_state(d, n, seed=d * n))
        assert g.trace() == pytest.approx(1.0, abs=1e-12)
        assert rank(g) <= d

    def test_rejects_non_square(self):
        with pytest.raises(ShapeMismatch):
            gram_from_entries(np.ones((2, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            gram_from_entries([[1.0, 1.0], [0.0, 1.0]])

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            gram_from_entries(np.diag([1.5, -0.5]))

    def test_rejects_ragged_vectors(self):
        with pytest.raises(DimensionMismatch):
            gram_from_vectors([[1.0, 0.0], [1.0]])


class TestRankAndRealize:
    def test_rank_of_projector(self):
        g = gram_from_entries(np.diag([0.5, 0.5, 0.0, 0.0]))
        assert rank(g) == 2

    @pytest.mark.parametrize("d", [2, 4])
    @pytest.mark.parametrize("mode", ["interior", "boundary-biased"])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_realize_round_trip(self, d, mode, seed):
        g = random_gram(d, seed=seed, mode=mode)
        again = gram_from_vectors(realize(g))
        assert frobenius(again.entries - g.entries) <= 1e-10

    def test_realize_preserves_rank(self):
        g = random_gram(4, seed=3, mode="boundary-biased")
        vectors = np.vstack(realize(g))
        assert np.linalg.matrix_rank(vectors, tol=1e-8) == rank(g)


class TestUnitaryInvariance:
    @pytest.mark.parametrize("d,n", [(2, 8), (4, 8)])
    def test_right_rotation_fixes_gram(self, d, n):
        st_ = random_state(d, n, seed=21)
        u = random_unitary(n, seed=22)
        g = gram_from_state(st_)
        g_after = gram_from_state(apply_right_unitary(st_, u))
        assert is_invariant_under(g, g_after)

    def test_detects_change(self):
        g = gram_from_entries(np.eye(2) / 2.0)
        h = gram_from_entries([[0.75, 0.0], [0.0, 0.25]])
        assert not is_invariant_under(g, h)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            is_invariant_under(
                gram_from_entries(np.eye(2) / 2.0), gram_from_entries(np.eye(3) / 3.0)
            )


class TestPrincipalMinors:
    @pytest.mark.parametrize(
        "subset", [(0,), (1, 3), (0, 2, 3), (0, 1, 2, 3)]
    )
    def test_matches_numpy_det(self, subset):
        rng = np.random.default_rng(8)
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        a = (a + a.conj().T) / 2.0
        idx = np.ix_(subset, subset)
        assert principal_minor(a, subset) == pytest.approx(
            np.linalg.det(a[idx]).real, abs=1e-10
        )


class TestG4Membership:
    def test_balanced_matrix_is_member(self):
        assert check_g4_membership(np.eye(4) / 4.0).is_member

    def test_rank_deficient_member(self):
        verdict = check_g4_membership(np.diag([0.5, 0.5, 0.0, 0.0]))
        assert verdict.is_member
        assert verdict.failed == ()

    def test_trace_violation(self):
        verdict = check_g4_membership(np.eye(4) / 2.0)
        assert not verdict.is_member
        assert "trace" in verdict.failed

    def test_diagonal_range_violation(self):
        m = np.diag([1.2, -0.2, 0.0, 0.0])
        verdict = check_g4_membership(m)
        assert "diagonal-range[0]" in verdict.failed
        assert "diagonal-range[1]" in verdict.failed

    def test_all_mode_checks_fifteen_minors(self):
        verdict = check_g4_membership(np.eye(4) / 4.0, minors="all")
        assert sum(1 for k in verdict.values if k.startswith("minor(")) == 15

    def test_leading_mode_checks_three_minors(self):
        verdict = check_g4_membership(np.eye(4) / 4.0, minors="leading")
        minor_keys = [k for k in verdict.values if k.startswith("minor(")]
        assert minor_keys == ["minor(0,1,2,3)", "minor(0,1,2)", "minor(0,1)"]

    def test_witness_splits_leading_from_full(self):
        leading = check_g4_membership(LEADING_BLIND_WITNESS, minors="leading")
        full = check_g4_membership(LEADING_BLIND_WITNESS, minors="all")
        assert leading.is_member
        assert not full.is_member
        assert "minor(0,2)" in full.failed
        assert full.values["minor(0,2)"] == pytest.approx(-0.25, abs=1e-12)

    def test_bad_mode_rejected(self):
        with pytest.raises(InvalidInput):
            check_g4_membership(np.eye(4) / 4.0, minors="some")

    def test_needs_4x4(self):
        with pytest.raises(ShapeMismatch):
            check_g4_membership(np.eye(3) / 3.0)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_random_unit_trace_psd_is_always_member(self, seed):
        g = random_gram(4, seed=seed)
        assert check_g4_membership(g.entries).is_member


class TestJson:
    def test_round_trip(self):
        g = random_gram(3, seed=12)
        again = gram_from_json(gram_to_json(g))
        np.testing.assert_allclose(again.entries, g.entries, atol=1e-15)

    @pytest.mark.parametrize(
        "mutate,field",
        [
            (lambda d: d.pop("entries"), "entries"),
            (lambda d: d.update(d=0), "d"),
            (lambda d: d.update(entries=[[1.0]]), "entries"),
        ],
    )
    def test_malformed_names_field(self, mutate, field):
        data = gram_to_json(random_gram(2, seed=13))
        mutate(data)
        with pytest.raises(InvalidInput) as err:
            gram_from_json(data)
        assert err.value.field == field

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from printed_fixtures import A4, EX1_A1, EX1_A3, EXSUBVIN_B, EXSUBVIN_S
from pcperron.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NonPositiveEntry,
    NonUnitDiagonal,
    ReciprocityViolation,
)
from pcperron.generators import random_consistent, random_reciprocal
from pcperron.matrix import (
    FIXTURE_TOL,
    SimilarityTransform,
    consistent_from_weights,
    is_consistent,
    monomial_similarity,
    ones,
    principal_submatrix,
    retained_submatrix,
    row_sums,
    validate,
)
from pcperron.spectral import perron


class TestValidate:
    def test_accepts_2x2(self):
        a = validate([[1, 2], [0.5, 1]])
        assert a.order == 2
        assert a.entries.tolist() == [[1, 2], [0.5, 1]]

    def test_reports_worst_pair(self):
        with pytest.raises(ReciprocityViolation) as exc:
            validate([[1, 2], [0.4, 1]])
        assert exc.value.pair == (0, 1)
        assert "(1, 2)" in str(exc.value)

    def test_fixture_matrix(self):
        validate(A4)

    def test_worst_of_several(self):
        a = np.ones((3, 3))
        a[0, 1], a[1, 0] = 2.0, 0.49
        a[1, 2], a[2, 1] = 3.0, 0.2
        with pytest.raises(ReciprocityViolation) as exc:
            validate(a)
        assert exc.value.pair == (1, 2)

    @pytest.mark.parametrize(
        "entries, err",
        [
            ([[1, -2], [-0.5, 1]], NonPositiveEntry),
            ([[1, 0], [np.inf, 1]], NonPositiveEntry),
            ([[1, np.nan], [1, 1]], NonPositiveEntry),
            ([[2, 2], [0.5, 1]], NonUnitDiagonal),
            ([[1, 2, 3], [0.5, 1, 1]], DimensionMismatch),
            ([[1]], DimensionMismatch),
        ],
    )
    def test_rejects(self, entries, err):
        with pytest.raises(err):
            validate(entries)

    def test_diagonal_not_repaired(self):
        with pytest.raises(NonUnitDiagonal):
            validate([[1.0 + 1e-6, 1.0], [1.0, 1.0]])

    def test_fixture_tolerance(self):
        rounded = [[1, 1.2783], [0.7823, 1]]
        with pytest.raises(ReciprocityViolation):
            validate(rounded)
        validate(rounded, FIXTURE_TOL)

    def test_immutable(self):
        a = validate([[1, 2], [0.5, 1]])
        with pytest.raises(ValueError):
            a.entries[0, 1] = 3.0


class TestConsistency:
    def test_ones(self):
        assert is_consistent(ones(3))

    def test_inconsistent_cycle(self):
        assert not is_consistent(EX1_A3)

    def test_from_weights(self):
        a = consistent_from_weights([2, 1, 1])
        assert a.entries.tolist() == [[1, 2, 2], [0.5, 1, 1], [0.5, 1, 1]]
        assert is_consistent(a)

    def test_unit_weights_give_ones(self):
        assert consistent_from_weights([1, 1, 1]).entries.tolist() == np.ones((3, 3)).tolist()

    @pytest.mark.parametrize("k", [2, 3, 6])
    def test_type_one_example(self, k):
        a = consistent_from_weights([5.0] + [1.0] * (k - 1))
        assert np.allclose(a.entries[0, 1:], 5.0)
        assert np.allclose(a.entries[1:, 0], 0.2)
        assert np.allclose(a.entries[1:, 1:], 1.0)
        assert is_consistent(a)


class TestRowSums:
    def test_ones(self):
        prof = row_sums(ones(5))
        assert prof.sums.tolist() == [5.0] * 5
        assert prof.total == 25.0

    @pytest.mark.parametrize(
        "a",
        [EX1_A1, A4],
        ids=["A1", "A4"],
    )
    def test_against_hand_sums(self, a):
        # oracle: plain python summation of the printed rows
        expected = [math.fsum(row) for row in a.tolist()]
        prof = row_sums(a)
        assert np.allclose(prof.sums, expected, rtol=1e-15)
        assert prof.sums[prof.max_index] == max(expected)
        assert prof.sums[prof.min_index] == min(expected)

    def test_printed_values(self):
        assert np.allclose(row_sums(EX1_A1).sums, [3.6, 4.5, 3.0])
        assert np.allclose(row_sums(A4).sums, [6.3, 6.2222222, 5.6960784])

    def test_sorted_desc(self):
        prof = row_sums(EX1_A1)
        assert prof.sorted_desc == (1, 0, 2)

    def test_entry_total_bound(self):
        rng = np.random.default_rng(11)
        for n in range(2, 8):
            logs = rng.uniform(-np.log(9), np.log(9), size=(10_000, n, n))
            up = np.triu(logs, 1)
            mats = np.exp(up - np.swapaxes(up, 1, 2))
            totals = mats.sum(axis=(1, 2))
            assert np.all(totals >= n * n)
        assert row_sums(ones(4)).total == 16.0


class TestMonomialSimilarity:
    def test_identity(self):
        a = validate(A4)
        assert monomial_similarity(a, SimilarityTransform.identity(3)).allclose(A4, rtol=0)

    def test_perron_scaling_gives_constant_row_sums(self):
        w = perron(EXSUBVIN_S).vector
        c = monomial_similarity(EXSUBVIN_S, SimilarityTransform(1.0 / w))
        sums = c.entries.sum(axis=1)
        assert np.ptp(sums) / sums.max() < 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            monomial_similarity(A4, SimilarityTransform.identity(4))

    def test_inverse_round_trip(self):
        rng = np.random.default_rng(5)
        a = random_reciprocal(5, 9.0, 1).entries
        t = SimilarityTransform(np.exp(rng.normal(size=5)), tuple(rng.permutation(5)))
        back = t.inverse().apply_matrix(t.apply_matrix(a))
        assert np.allclose(back, a, rtol=1e-12)
        v = rng.uniform(1, 2, 5)
        assert np.allclose(t.inverse().apply_vector(t.apply_vector(v)), v, rtol=1e-12)

    def test_rejects_bad_diagonal(self):
        with pytest.raises(NonPositiveEntry):
            SimilarityTransform([1.0, -1.0])

    @settings(max_examples=200, deadline=None)
    @given(
        seed=st.integers(0, 2**32 - 1),
        n=st.integers(2, 7),
        logd=st.lists(st.floats(-3, 3), min_size=7, max_size=7),
        perm_seed=st.integers(0, 1000),
    )
    def test_reciprocity_and_consistency_preserved(self, seed, n, logd, perm_seed):
        perm = tuple(np.random.default_rng(perm_seed).permutation(n))
        t = SimilarityTransform(np.exp(logd[:n]), perm)
        a = random_reciprocal(n, 9.0, seed)
        validate(monomial_similarity(a, t), tol=1e-9 * 10)
        assert not is_consistent(monomial_similarity(a, t)) or is_consistent(a)
        c = random_consistent(n, 9.0, seed)
        assert is_consistent(monomial_similarity(c, t))


class TestSubmatrix:
    def test_delete_last_of_ones(self):
        assert principal_submatrix(ones(4), [3]).entries.tolist() == np.ones((3, 3)).tolist()

    def test_retained_leading_block(self):
        assert np.array_equal(retained_submatrix(EXSUBVIN_S, [0, 1, 2]).entries, EXSUBVIN_B)

    def test_empty_deletion(self):
        assert np.array_equal(principal_submatrix(A4, []).entries, A4)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            principal_submatrix(A4, [3])

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 7), data=st.data())
    def test_consistent_submatrix_consistent(self, seed, n, data):
        drop = data.draw(st.sets(st.integers(0, n - 1), max_size=n - 2))
        assert is_consistent(principal_submatrix(random_consistent(n, 9.0, seed), drop))

from __future__ import annotations

import numpy as np
import pytest
import scipy.linalg

from mproduct import kernels
from mproduct.errors import ContractViolationError, DimensionMismatchError
from mproduct.testing import jordan_block, matrix_with_index, well_conditioned


def gd_residuals(a: np.ndarray, x: np.ndarray, k: int) -> list:
    a_k = np.linalg.matrix_power(a, k)
    a_k1 = a_k @ a
    return [
        kernels.relative_residual(a @ x @ a, a),
        kernels.relative_residual(x @ a_k1, a_k),
        kernels.relative_residual(a_k1 @ x, a_k),
    ]


class TestRankAndIndex:
    def test_rank_ignores_round_off(self):
        assert kernels.numerical_rank(np.diag([1.0, 1e-14])) == 1
        assert kernels.numerical_rank(np.diag([1.0, 1e-6])) == 2

    def test_rank_of_zero_matrix(self):
        assert kernels.numerical_rank(np.zeros((3, 2))) == 0

    @pytest.mark.parametrize(
        "matrix, expected",
        [
            (np.eye(3), 0),
            (np.zeros((2, 2)), 1),
            (np.diag([2.0, 0.0]), 1),
            (np.array([[0.0, 1.0], [0.0, 0.0]]), 2),
            (jordan_block(4), 4),
        ],
    )
    def test_index(self, matrix, expected):
        assert kernels.matrix_index(matrix) == expected

    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_index_of_constructed_matrix(self, rng, index):
        assert kernels.matrix_index(matrix_with_index(rng, 5, index)) == index

    def test_index_needs_square(self):
        with pytest.raises(DimensionMismatchError):
            kernels.matrix_index(np.ones((2, 3)))


class TestCoreNilpotent:
    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_reconstructs(self, rng, index):
        a = matrix_with_index(rng, 5, index)
        factors = kernels.core_nilpotent_decompose(a)
        assert factors.k == index
        assert factors.rank == 5 - index
        assert kernels.relative_residual(factors.reconstruct(), a) <= 1e-10
        if index:
            leak = np.linalg.matrix_power(factors.n_part, index)
            assert np.linalg.norm(leak) <= 1e-9

    def test_invertible_matrix_has_empty_nilpotent_block(self, rng):
        factors = kernels.core_nilpotent_decompose(well_conditioned(rng, 3))
        assert factors.n_part.shape == (0, 0)
        assert factors.rank == 3

    def test_zero_matrix_is_all_nilpotent(self):
        factors = kernels.core_nilpotent_decompose(np.zeros((2, 2)))
        assert factors.rank == 0
        np.testing.assert_allclose(factors.n_part, 0)


class TestMoorePenrose:
    def test_diagonal(self):
        np.testing.assert_allclose(kernels.mp_inverse_matrix(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))

    def test_jordan_block(self):
        np.testing.assert_allclose(
            kernels.mp_inverse_matrix(np.array([[0.0, 1.0], [0.0, 0.0]])), [[0.0, 0.0], [1.0, 0.0]]
        )

    def test_rectangular_penrose_equations(self, rng):
        a = rng.standard_normal((4, 2)) @ rng.standard_normal((2, 3))
        x = kernels.mp_inverse_matrix(a)
        assert x.shape == (3, 4)
        assert kernels.relative_residual(a @ x @ a, a) <= 1e-10
        assert kernels.relative_residual(x @ a @ x, x) <= 1e-10
        assert kernels.relative_residual((a @ x).conj().T, a @ x) <= 1e-10
        assert kernels.relative_residual((x @ a).conj().T, x @ a) <= 1e-10

    def test_reference_norm_truncates_small_blocks(self):
        tiny = np.array([[0.0, 1e-15], [0.0, 0.0]])
        assert np.linalg.norm(kernels.mp_inverse_matrix(tiny)) > 1e14
        np.testing.assert_array_equal(kernels.mp_inverse_matrix(tiny, reference_norm=1.0), 0)


class TestNilpotentOneInverse:
    def test_canonical_choice_is_mp_inverse(self):
        n_part = jordan_block(3)
        n_minus = kernels.one_inverse_nilpotent(n_part)
        np.testing.assert_allclose(n_minus, n_part.T)
        np.testing.assert_allclose(n_part @ n_minus @ n_part, n_part)

    def test_rejects_non_nilpotent_block(self):
        with pytest.raises(ContractViolationError):
            kernels.one_inverse_nilpotent(np.array([[1.0]]))

    def test_empty_block(self):
        assert kernels.one_inverse_nilpotent(np.zeros((0, 0))).shape == (0, 0)


class TestGDAndDrazin:
    @pytest.mark.parametrize("index", [0, 1, 2, 3])
    def test_gd_equations(self, rng, index):
        a = matrix_with_index(rng, 5, index)
        x = kernels.matrix_gd_inverse(a)
        assert max(gd_residuals(a, x, index)) <= 1e-8

    def test_gd_of_invertible_is_inverse(self, rng):
        a = well_conditioned(rng, 4)
        np.testing.assert_allclose(kernels.matrix_gd_inverse(a), scipy.linalg.inv(a), atol=1e-10)

    @pytest.mark.parametrize("index", [1, 2, 3])
    def test_drazin_matches_limit_formula(self, rng, index):
        a = matrix_with_index(rng, 5, index)
        x = kernels.matrix_drazin_inverse(a)
        oracle = kernels.drazin_limit_oracle(a)
        assert kernels.relative_residual(x, oracle) <= 1e-6
        assert kernels.relative_residual(x @ a @ x, x) <= 1e-8
        assert kernels.relative_residual(a @ x, x @ a) <= 1e-8

    def test_drazin_of_nilpotent_is_zero(self):
        np.testing.assert_allclose(kernels.matrix_drazin_inverse(jordan_block(3)), 0, atol=1e-14)

    def test_drazin_is_similarity_invariant(self, rng):
        a = matrix_with_index(rng, 4, 2)
        s = well_conditioned(rng, 4)
        s_inv = scipy.linalg.inv(s)
        lhs = kernels.matrix_drazin_inverse(s @ a @ s_inv)
        rhs = s @ kernels.matrix_drazin_inverse(a) @ s_inv
        assert kernels.relative_residual(lhs, rhs) <= 1e-8

    def test_gd_from_other_one_inverse(self, rng):
        a = matrix_with_index(rng, 4, 2)
        factors = kernels.core_nilpotent_decompose(a)
        pinv = scipy.linalg.pinv(factors.n_part)
        w = rng.standard_normal(factors.n_part.shape)
        n_minus = pinv + w - pinv @ factors.n_part @ w @ factors.n_part @ pinv
        x = kernels.matrix_gd_inverse_from(factors, n_minus)
        assert max(gd_residuals(a, x, 2)) <= 1e-8

    def test_one_inverse_shape_checked(self, rng):
        factors = kernels.core_nilpotent_decompose(matrix_with_index(rng, 4, 2))
        with pytest.raises(DimensionMismatchError):
            kernels.matrix_gd_inverse_from(factors, np.zeros((1, 1)))


class TestLargeNorms:
    @pytest.mark.parametrize("scale", [1e-4, 1e4, 1e5])
    def test_index_three_gd_and_drazin(self, rng, scale):
        a = scale * matrix_with_index(rng, 5, 3)
        factors = kernels.core_nilpotent_decompose(a)
        assert factors.k == 3
        assert max(gd_residuals(a, kernels.matrix_gd_inverse(a), 3)) <= 1e-8

        x = kernels.matrix_drazin_inverse(a)
        assert kernels.relative_residual(x @ np.linalg.matrix_power(a, 4), np.linalg.matrix_power(a, 3)) <= 1e-8
        assert kernels.relative_residual(x @ a @ x, x) <= 1e-8
        assert kernels.relative_residual(a @ x, x @ a) <= 1e-8

    def test_round_off_nilpotent_block_accepted(self):
        n_part = 1e5 * jordan_block(3)
        n_part[2, 0] = 1e-11
        n_minus = kernels.one_inverse_nilpotent(n_part)
        assert kernels.relative_residual(n_part @ n_minus @ n_part, n_part) <= 1e-10

    @pytest.mark.parametrize(
        "block",
        [np.array([[1e5]]), 1e5 * np.array([[0.0, 1.0], [1e-3, 0.0]])],
    )
    def test_large_non_nilpotent_block_rejected(self, block):
        with pytest.raises(ContractViolationError):
            kernels.one_inverse_nilpotent(block)

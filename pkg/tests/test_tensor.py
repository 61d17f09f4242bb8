from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mproduct import formats
from mproduct.errors import DimensionMismatchError, SingularTransformError
from mproduct.kernels import relative_residual
from mproduct.tensor import (
    Tensor3,
    TransformedTensor,
    TransformMatrix,
    conj_transpose,
    facewise_product,
    identity_tensor,
    inverse_transform,
    m_product,
    m_product_chain,
    m_product_via_matt,
    mode3_fold,
    mode3_product,
    mode3_unfold,
    tensor_power,
    transform,
    transform_preset,
)
from mproduct.testing import (
    block_circulant,
    circular_t_product,
    from_transformed_slices,
    random_tensor,
    random_transform,
)


def close(lhs: Tensor3, rhs: Tensor3) -> float:
    return relative_residual(lhs.data, rhs.data)


small_dims = st.tuples(st.integers(1, 4), st.integers(1, 4), st.integers(1, 3))


class TestUnfolding:
    def test_tube_unfolds_to_column(self):
        tube = Tensor3(np.array([7.0, 9.0]).reshape(1, 1, 2))
        np.testing.assert_array_equal(mode3_unfold(tube), [[7], [9]])

    def test_single_slice_unfolds_column_major(self):
        a = Tensor3.from_slices([np.array([[1, 2], [3, 4]])])
        np.testing.assert_array_equal(mode3_unfold(a), [[1, 3, 2, 4]])

    def test_fold_inverts_unfold(self, rng):
        a = random_tensor(rng, (2, 2, 2))
        unfolded = mode3_unfold(a)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    assert unfolded[k, j * 2 + i] == a.data[i, j, k]
        np.testing.assert_array_equal(mode3_fold(unfolded, a.dims).data, a.data)


class TestModeProduct:
    def test_identity_matrix_is_neutral(self, rng):
        a = random_tensor(rng, (2, 3, 3))
        np.testing.assert_array_equal(mode3_product(a, np.eye(3)).data, a.data)

    def test_tube_by_hand(self):
        tube = Tensor3(np.array([1.0, 2.0]).reshape(1, 1, 2))
        result = mode3_product(tube, np.array([[1, 1], [0, 1]]))
        np.testing.assert_allclose(result.data.ravel(), [3, 2])

    def test_matches_fiberwise_oracle(self, rng):
        a = random_tensor(rng, (2, 3, 3))
        n = rng.standard_normal((4, 3))
        result = mode3_product(a, n)
        assert result.dims == (2, 3, 4)
        for i in range(2):
            for j in range(3):
                np.testing.assert_allclose(result.data[i, j, :], n @ a.data[i, j, :], atol=1e-13)
        np.testing.assert_allclose(mode3_unfold(result), n @ mode3_unfold(a), atol=1e-13)

    def test_rejects_wrong_width(self, rng):
        with pytest.raises(DimensionMismatchError):
            mode3_product(random_tensor(rng, (2, 2, 3)), np.eye(2))


class TestTransformMatrix:
    def test_rejects_singular_matrix(self):
        with pytest.raises(SingularTransformError):
            TransformMatrix(np.array([[1.0, 2.0], [2.0, 4.0]]))

    def test_rejects_nonsquare_matrix(self):
        with pytest.raises(DimensionMismatchError):
            TransformMatrix(np.ones((2, 3)))

    def test_caches_inverse(self, example_m):
        np.testing.assert_allclose(example_m.m @ example_m.m_inverse, np.eye(3), atol=1e-14)
        assert example_m.condition_estimate >= 1.0

    def test_dft_preset_is_unitary(self):
        m = transform_preset("dft", 4)
        np.testing.assert_allclose(m.m @ m.m.conj().T, np.eye(4), atol=1e-14)

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            transform_preset("haar", 3)


class TestTransform:
    def test_identity_transform_keeps_slices(self, rng):
        a = random_tensor(rng, (2, 3, 3))
        a_hat = transform(a, TransformMatrix.identity(3))
        for k in range(3):
            np.testing.assert_array_equal(a_hat.slice(k), a.frontal_slice(k))

    def test_example_transform(self, example_m):
        a = formats.load_example_tensor("gd_a")
        a_hat = transform(a, example_m)
        np.testing.assert_allclose(a_hat.slice(0).real, [[2, 2, 4], [3, 3, 4], [2, 2, 3]])
        np.testing.assert_allclose(a_hat.slice(2).real, [[2, 2, 2], [1, 2, 1], [2, 2, 2]])

    def test_slice_count_must_match(self, rng):
        with pytest.raises(DimensionMismatchError):
            transform(random_tensor(rng, (2, 2, 2)), TransformMatrix.identity(3))


class TestFacewise:
    def test_identity_slices(self, rng):
        a = random_tensor(rng, (2, 3, 2))
        eye = Tensor3(np.broadcast_to(np.eye(3)[:, :, None], (3, 3, 2)))
        np.testing.assert_allclose(facewise_product(a, eye).data, a.data)

    def test_scalar_slices(self):
        a = Tensor3(np.array([2.0, 3.0]).reshape(1, 1, 2))
        b = Tensor3(np.array([5.0, 7.0]).reshape(1, 1, 2))
        np.testing.assert_allclose(facewise_product(a, b).data.ravel(), [10, 21])

    def test_transformed_tensors(self, rng):
        a = TransformedTensor(rng.standard_normal((3, 2, 4)))
        b = TransformedTensor(rng.standard_normal((3, 4, 5)))
        result = facewise_product(a, b)
        for i in range(3):
            np.testing.assert_allclose(result.slice(i), a.slice(i) @ b.slice(i), atol=1e-13)

    def test_inner_dimension_mismatch(self, rng):
        with pytest.raises(DimensionMismatchError):
            facewise_product(random_tensor(rng, (2, 3, 2)), random_tensor(rng, (2, 3, 2)))

    def test_mixed_kinds_rejected(self, rng):
        a = random_tensor(rng, (2, 2, 2))
        with pytest.raises(TypeError):
            facewise_product(a, transform(a, TransformMatrix.identity(2)))


class TestMProduct:
    def test_single_slice_is_matrix_product(self, rng):
        a, b = random_tensor(rng, (3, 2, 1)), random_tensor(rng, (2, 4, 1))
        result = m_product(a, b, TransformMatrix(np.array([[1.0]])))
        np.testing.assert_allclose(result.frontal_slice(0), a.frontal_slice(0) @ b.frontal_slice(0), rtol=0, atol=1e-13)

    def test_matches_block_diagonal_oracle(self, rng):
        m = TransformMatrix(np.array([[1.0, 1.0], [0.0, 1.0]]))
        a, b = random_tensor(rng, (2, 2, 2)), random_tensor(rng, (2, 2, 2))
        assert close(m_product(a, b, m), m_product_via_matt(a, b, m)) <= 1e-12

    def test_identity_tensor_example(self, example_m):
        a = formats.load_example_tensor("gd_a")
        eye = identity_tensor(3, 3, example_m)
        assert close(m_product(a, eye, example_m), a) <= 1e-12
        assert close(m_product(eye, a, example_m), a) <= 1e-12

    def test_identity_tensor_under_identity_transform(self):
        eye = identity_tensor(2, 3, TransformMatrix.identity(3))
        for k in range(3):
            np.testing.assert_array_equal(eye.frontal_slice(k), np.eye(2))

    def test_chain_matches_pairwise(self, rng):
        m = random_transform(rng, 3)
        a, b, c = (random_tensor(rng, (2, 2, 3)) for _ in range(3))
        assert close(m_product_chain([a, b, c], m), m_product(m_product(a, b, m), c, m)) <= 1e-12


class TestPowersAndAdjoint:
    def test_power_zero_and_one(self, rng):
        m = random_transform(rng, 2)
        a = random_tensor(rng, (2, 2, 2))
        assert close(tensor_power(a, 0, m), identity_tensor(2, 2, m)) <= 1e-12
        assert close(tensor_power(a, 1, m), a) <= 1e-12

    def test_cube_matches_repeated_product(self, rng):
        m = random_transform(rng, 2)
        a = random_tensor(rng, (2, 2, 2))
        assert close(tensor_power(a, 3, m), m_product(m_product(a, a, m), a, m)) <= 1e-11

    def test_power_needs_square(self, rng):
        with pytest.raises(DimensionMismatchError):
            tensor_power(random_tensor(rng, (2, 3, 2)), 2, TransformMatrix.identity(2))

    def test_symmetric_slices_are_self_adjoint(self, rng):
        m = TransformMatrix(rng.standard_normal((3, 3)) + 3 * np.eye(3))
        slices = [s + s.T for s in rng.standard_normal((3, 2, 2))]
        a = from_transformed_slices(slices, m)
        assert close(conj_transpose(a, m), a) <= 1e-12

    def test_adjoint_is_involution(self, rng):
        m = random_transform(rng, 3)
        a = random_tensor(rng, (2, 3, 3))
        assert close(conj_transpose(conj_transpose(a, m), m), a) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(dims=small_dims, inner=st.integers(1, 4), seed=st.integers(0, 2**32 - 1))
def test_algebra_properties(dims, inner, seed):
    rng = np.random.default_rng(seed)
    n1, n2, n3 = dims
    m = random_transform(rng, n3)
    a = random_tensor(rng, (n1, n2, n3))
    b = random_tensor(rng, (n2, inner, n3))
    c = random_tensor(rng, (inner, n1, n3))
    a2 = random_tensor(rng, (n1, n2, n3))
    b2 = random_tensor(rng, (n2, inner, n3))

    assert close(inverse_transform(transform(a, m), m), a) <= 1e-12

    ab = m_product(a, b, m)
    block = transform(a, m).matt() @ transform(b, m).matt()
    np.testing.assert_allclose(transform(ab, m).matt(), block, rtol=0, atol=1e-12 * (1 + np.linalg.norm(block)))

    assert close(m_product(ab, c, m), m_product(a, m_product(b, c, m), m)) <= 1e-10
    assert close(m_product(a, b + b2, m), ab + m_product(a, b2, m)) <= 1e-10
    assert close(m_product(a + a2, b, m), ab + m_product(a2, b, m)) <= 1e-10
    assert close(m_product(identity_tensor(n1, n3, m), a, m), a) <= 1e-10
    assert close(m_product(a, identity_tensor(n2, n3, m), m), a) <= 1e-10
    assert close(conj_transpose(ab, m), m_product(conj_transpose(b, m), conj_transpose(a, m), m)) <= 1e-10


@settings(max_examples=25, deadline=None)
@given(dims=small_dims, seed=st.integers(0, 2**32 - 1))
def test_dft_preset_is_scaled_circular_convolution(dims, seed):
    rng = np.random.default_rng(seed)
    n1, n2, n3 = dims
    m = TransformMatrix.dft(n3)
    a = random_tensor(rng, (n1, n2, n3))
    b = random_tensor(rng, (n2, n1, n3))
    expected = circular_t_product(a, b).scale(1 / np.sqrt(n3))
    assert close(m_product(a, b, m), expected) <= 1e-12
    np.testing.assert_allclose(
        block_circulant(m_product(a, b, m)) * np.sqrt(n3),
        block_circulant(a) @ block_circulant(b),
        atol=1e-10 * (1 + np.linalg.norm(block_circulant(a)) * np.linalg.norm(block_circulant(b))),
    )

"""Random constructions with controlled structure, for property tests and experiments.

Random pairs of tensors almost never commute, so tests of the product and additive laws
build their inputs from the families below: polynomials in one tensor, block-disjoint
pairs sharing a unitary basis, and Hermitian involutions.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np
import scipy.linalg

from . import ginv
from .tensor import (
    Dims,
    Tensor3,
    TransformedTensor,
    TransformMatrix,
    identity_tensor,
    inverse_transform,
    m_product_chain,
    tensor_power,
)


def random_complex(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = scipy.linalg.qr(random_complex(rng, (n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def well_conditioned(rng: np.random.Generator, n: int, condition: float = 4.0) -> np.ndarray:
    """Random complex matrix with singular values spread over ``[1, condition]``."""

    singular_values = np.linspace(1.0, condition, n) if n > 1 else np.ones(1)
    return random_unitary(rng, n) @ np.diag(rng.permutation(singular_values)) @ random_unitary(rng, n)


def random_transform(rng: np.random.Generator, n: int, condition: float = 4.0) -> TransformMatrix:
    return TransformMatrix(well_conditioned(rng, n, condition))


def random_tensor(rng: np.random.Generator, dims: Dims) -> Tensor3:
    return Tensor3(random_complex(rng, dims))


def from_transformed_slices(slices: Sequence[np.ndarray], m: TransformMatrix) -> Tensor3:
    """Tensor whose transformed slices are exactly ``slices``."""

    return inverse_transform(TransformedTensor(np.stack([np.asarray(s) for s in slices], axis=0)), m)


def jordan_block(size: int) -> np.ndarray:
    return np.eye(size, k=1, dtype=np.complex128)


def matrix_with_index(rng: np.random.Generator, n: int, index: int) -> np.ndarray:
    """``P blockdiag(C, J) P^-1`` with C invertible and J a nilpotent Jordan block of order ``index``."""

    if not 0 <= index <= n:
        raise ValueError(f"index {index} is impossible for order {n}")
    core = well_conditioned(rng, n - index, condition=3.0) if n > index else np.zeros((0, 0))
    nilpotent = jordan_block(index) if index else np.zeros((0, 0))
    p = well_conditioned(rng, n, condition=3.0)
    return p @ scipy.linalg.block_diag(core, nilpotent) @ scipy.linalg.inv(p)


def tensor_with_indices(rng: np.random.Generator, n: int, indices: Sequence[int], m: TransformMatrix) -> Tensor3:
    """Tensor whose i-th transformed slice has index ``indices[i]``."""

    return from_transformed_slices([matrix_with_index(rng, n, index) for index in indices], m)


def tensor_with_index(rng: np.random.Generator, n: int, index: int, m: TransformMatrix) -> Tensor3:
    return tensor_with_indices(rng, n, [index] * m.size, m)


def tensor_with_orthogonal_split(rng: np.random.Generator, n: int, index: int, m: TransformMatrix) -> Tensor3:
    """Slices ``Q blockdiag(C, J) Q^*`` with Q unitary, so the range and null space of A^k are orthogonal."""

    if not 0 <= index <= n:
        raise ValueError(f"index {index} is impossible for order {n}")
    slices = []
    for _ in range(m.size):
        core = well_conditioned(rng, n - index, condition=3.0) if n > index else np.zeros((0, 0))
        nilpotent = jordan_block(index) if index else np.zeros((0, 0))
        q = random_unitary(rng, n)
        slices.append(q @ scipy.linalg.block_diag(core, nilpotent) @ q.conj().T)
    return from_transformed_slices(slices, m)


def hermitian_involution(rng: np.random.Generator, n: int, rank: int | None = None) -> np.ndarray:
    """``Q diag(+-1, ..., 0, ...) Q^*``: Hermitian and equal to its own MP inverse."""

    rank = n if rank is None else rank
    signs = np.concatenate([rng.choice([-1.0, 1.0], size=rank), np.zeros(n - rank)])
    q = random_unitary(rng, n)
    return q @ np.diag(signs) @ q.conj().T


def commuting_hermitian_pair(
    rng: np.random.Generator, n: int, m: TransformMatrix
) -> Tuple[Tensor3, Tensor3]:
    """Two tensors whose transformed slices are simultaneously diagonal with entries in {-1, 0, 1}.

    The leading diagonal entry is never zero, so no slice of the product vanishes.
    """

    a_slices, b_slices = [], []
    for _ in range(m.size):
        q = random_unitary(rng, n)
        for target in (a_slices, b_slices):
            diagonal = np.concatenate([rng.choice([-1.0, 1.0], size=1), rng.choice([-1.0, 0.0, 1.0], size=n - 1)])
            target.append(q @ np.diag(diagonal) @ q.conj().T)
    return from_transformed_slices(a_slices, m), from_transformed_slices(b_slices, m)


def block_disjoint_pair(
    rng: np.random.Generator,
    n: int,
    split: int,
    m: TransformMatrix,
    *,
    hermitian: bool = False,
) -> Tuple[Tensor3, Tensor3]:
    """``Q blockdiag(C, 0) Q^*`` and ``Q blockdiag(0, D) Q^*`` with a shared unitary Q per slice.

    With ``hermitian`` the blocks are Hermitian involutions, so both tensors equal their MP inverses.
    """

    if not 0 < split < n:
        raise ValueError("split must leave two nonempty blocks")
    a_slices, b_slices = [], []
    for _ in range(m.size):
        q = random_unitary(rng, n)
        if hermitian:
            c, d = hermitian_involution(rng, split), hermitian_involution(rng, n - split)
        else:
            c, d = well_conditioned(rng, split), well_conditioned(rng, n - split)
        a_slices.append(q @ scipy.linalg.block_diag(c, np.zeros((n - split, n - split))) @ q.conj().T)
        b_slices.append(q @ scipy.linalg.block_diag(np.zeros((split, split)), d) @ q.conj().T)
    return from_transformed_slices(a_slices, m), from_transformed_slices(b_slices, m)


def tensor_polynomial(a: Tensor3, coefficients: Sequence[complex], m: TransformMatrix) -> Tensor3:
    """``c0 I + c1 A + c2 A^2 + ...`` under the M-product."""

    result = Tensor3.zeros(a.dims)
    for power, coefficient in enumerate(coefficients):
        if coefficient:
            result = result + tensor_power(a, power, m).scale(coefficient)
    return result


def random_one_inverse(rng: np.random.Generator, n_part: np.ndarray, spread: float = 1.0) -> np.ndarray:
    """A random {1}-inverse ``N^+ + W - N^+ N W N N^+`` of ``n_part``."""

    pinv = scipy.linalg.pinv(n_part) if n_part.size else n_part.copy()
    w = spread * random_complex(rng, n_part.shape[::-1])
    return pinv + w - pinv @ n_part @ w @ n_part @ pinv


def random_gd_candidate(
    rng: np.random.Generator, a: Tensor3, m: TransformMatrix, spread: float = 1.0
) -> Tensor3:
    """A valid but non-canonical GD inverse of ``a``."""

    core = ginv.tensor_core_nilpotent(a, m)
    blocks = [random_one_inverse(rng, factors.n_part, spread) for factors in core.factors]
    return ginv.gd_inverse_from_blocks(core, blocks, m)


def block_circulant(a: Tensor3) -> np.ndarray:
    """``bcirc(A)``: block (i, j) is frontal slice ``(i - j) mod n3``."""

    n1, n2, n3 = a.dims
    result = np.zeros((n1 * n3, n2 * n3), dtype=np.complex128)
    for i in range(n3):
        for j in range(n3):
            result[i * n1 : (i + 1) * n1, j * n2 : (j + 1) * n2] = a.frontal_slice((i - j) % n3)
    return result


def circular_t_product(a: Tensor3, b: Tensor3) -> Tensor3:
    """Tube-wise circular convolution, computed directly in the original domain."""

    n1, _, n3 = a.dims
    result = np.zeros((n1, b.dims[1], n3), dtype=np.complex128)
    for k in range(n3):
        for j in range(n3):
            result[:, :, k] += a.frontal_slice(j) @ b.frontal_slice((k - j) % n3)
    return Tensor3(result)


def identity_like(a: Tensor3, m: TransformMatrix) -> Tensor3:
    return identity_tensor(a.dims[0], a.dims[2], m)


def product(m: TransformMatrix, *tensors: Tensor3) -> Tensor3:
    return m_product_chain(tensors, m)

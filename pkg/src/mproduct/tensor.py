"""Dense third-order tensors and the M-product algebra.

A tensor is stored as a complex ``(n1, n2, n3)`` array whose last axis selects the
frontal slice. The transform domain stores the ``n3`` slices first so that slice-wise
products map onto batched ``numpy.matmul`` calls.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence, Tuple

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NumericalFailureError, SingularTransformError


LOGGER = logging.getLogger(__name__)

Dims = Tuple[int, int, int]

# Smallest accepted ratio sigma_min / sigma_max for a transform matrix.
SINGULARITY_RATIO = 1e-12
TRANSFORM_PRESETS = ("identity", "dft")


def _frozen_complex(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.complex128, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Tensor3:
    """Immutable complex tensor of order three; ``data[i, j, k]`` is entry (i, j) of slice k."""

    data: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.data)
        if array.ndim != 3:
            raise DimensionMismatchError(f"expected a 3-way array, got shape {array.shape}")
        if min(array.shape) < 1:
            raise DimensionMismatchError(f"tensor dimensions must be positive, got {array.shape}")
        object.__setattr__(self, "data", _frozen_complex(array))

    @classmethod
    def from_slices(cls, slices: Sequence[np.ndarray]) -> "Tensor3":
        """Stack frontal slices ``A(1), ..., A(n3)`` into a tensor."""

        if len(slices) == 0:
            raise DimensionMismatchError("at least one frontal slice is required")
        matrices = [np.atleast_2d(np.asarray(s, dtype=np.complex128)) for s in slices]
        shapes = {mat.shape for mat in matrices}
        if len(shapes) != 1:
            raise DimensionMismatchError(f"frontal slices disagree in shape: {sorted(shapes)}")
        return cls(np.stack(matrices, axis=2))

    @classmethod
    def zeros(cls, dims: Dims) -> "Tensor3":
        return cls(np.zeros(dims, dtype=np.complex128))

    @property
    def dims(self) -> Dims:
        n1, n2, n3 = self.data.shape
        return (n1, n2, n3)

    @property
    def is_square(self) -> bool:
        return self.dims[0] == self.dims[1]

    def frontal_slice(self, k: int) -> np.ndarray:
        """Return frontal slice ``k`` (0-based) as an ``n1 x n2`` matrix."""

        return self.data[:, :, k]

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.data.ravel()))

    def scale(self, factor: complex) -> "Tensor3":
        return Tensor3(self.data * factor)

    def _check_same_dims(self, other: "Tensor3") -> None:
        if self.dims != other.dims:
            raise DimensionMismatchError(f"tensor dims differ: {self.dims} vs {other.dims}")

    def __add__(self, other: "Tensor3") -> "Tensor3":
        self._check_same_dims(other)
        return Tensor3(self.data + other.data)

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        self._check_same_dims(other)
        return Tensor3(self.data - other.data)

    def __neg__(self) -> "Tensor3":
        return Tensor3(-self.data)

    def __repr__(self) -> str:
        return f"Tensor3(dims={self.dims})"


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """Invertible ``n3 x n3`` matrix M with its inverse cached at construction."""

    m: np.ndarray
    m_inverse: np.ndarray = field(init=False)
    condition_estimate: float = field(init=False)

    def __post_init__(self) -> None:
        matrix = np.atleast_2d(np.asarray(self.m, dtype=np.complex128))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"transform matrix must be square, got shape {matrix.shape}")

        singular_values = scipy.linalg.svdvals(matrix)
        sigma_max, sigma_min = float(singular_values[0]), float(singular_values[-1])
        if sigma_min <= SINGULARITY_RATIO * sigma_max or sigma_max == 0.0:
            raise SingularTransformError(
                f"transform matrix is numerically singular (sigma_min={sigma_min:.3e}, sigma_max={sigma_max:.3e})"
            )

        inverse = scipy.linalg.inv(matrix)
        condition = sigma_max / sigma_min
        deviation = float(np.max(np.abs(matrix @ inverse - np.eye(matrix.shape[0]))))
        if deviation > 1e-10 * condition:
            raise NumericalFailureError(
                f"M @ M^-1 deviates from identity by {deviation:.3e} (condition {condition:.3e})"
            )

        object.__setattr__(self, "m", _frozen_complex(matrix))
        object.__setattr__(self, "m_inverse", _frozen_complex(inverse))
        object.__setattr__(self, "condition_estimate", condition)
        LOGGER.debug("Built %dx%d transform with condition %.3e", matrix.shape[0], matrix.shape[0], condition)

    @property
    def size(self) -> int:
        return int(self.m.shape[0])

    @classmethod
    def identity(cls, n: int) -> "TransformMatrix":
        return cls(np.eye(n))

    @classmethod
    def dft(cls, n: int) -> "TransformMatrix":
        """Normalized (unitary) DFT matrix; the M-product becomes a scaled t-product."""

        return cls(scipy.linalg.dft(n, scale="sqrtn"))


def transform_preset(name: str, n: int) -> TransformMatrix:
    if n < 1:
        raise ValueError("transform size must be positive")
    if name == "identity":
        return TransformMatrix.identity(n)
    if name == "dft":
        return TransformMatrix.dft(n)
    raise ValueError(f"unknown transform preset {name!r}; expected one of {TRANSFORM_PRESETS}")


@dataclass(frozen=True, eq=False)
class TransformedTensor:
    """Tensor in the transform domain; ``slices[i]`` is the i-th transformed frontal slice."""

    slices: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.slices)
        if array.ndim != 3:
            raise DimensionMismatchError(f"expected a stack of matrices, got shape {array.shape}")
        object.__setattr__(self, "slices", _frozen_complex(array))

    @property
    def dims(self) -> Dims:
        n3, n1, n2 = self.slices.shape
        return (n1, n2, n3)

    def slice(self, i: int) -> np.ndarray:
        return self.slices[i]

    def matt(self) -> np.ndarray:
        """Block-diagonal matrix carrying the transformed slices on its diagonal."""

        return scipy.linalg.block_diag(*self.slices)

    @classmethod
    def from_matt(cls, block: np.ndarray, dims: Dims) -> "TransformedTensor":
        n1, n2, n3 = dims
        block = np.asarray(block)
        if block.shape != (n1 * n3, n2 * n3):
            raise DimensionMismatchError(f"block matrix of shape {block.shape} does not match dims {dims}")
        slices = [block[i * n1 : (i + 1) * n1, i * n2 : (i + 1) * n2] for i in range(n3)]
        return cls(np.stack(slices, axis=0))


def _check_transform(a_dims: Dims, m: TransformMatrix) -> None:
    if a_dims[2] != m.size:
        raise DimensionMismatchError(f"tensor has {a_dims[2]} frontal slices but M has size {m.size}")


def mode3_unfold(a: Tensor3) -> np.ndarray:
    """Mode-3 unfolding: ``result[k, j * n1 + i] = a[i, j, k]``."""

    n1, n2, n3 = a.dims
    return a.data.transpose(2, 1, 0).reshape(n3, n2 * n1)


def mode3_fold(matrix: np.ndarray, dims: Dims) -> Tensor3:
    n1, n2, n3 = dims
    matrix = np.asarray(matrix)
    if matrix.shape != (n3, n1 * n2):
        raise DimensionMismatchError(f"cannot fold matrix of shape {matrix.shape} into dims {dims}")
    return Tensor3(matrix.reshape(n3, n2, n1).transpose(2, 1, 0))


def mode3_product(a: Tensor3, n: np.ndarray) -> Tensor3:
    """Multiply every mode-3 fiber of ``a`` by the ``J x n3`` matrix ``n``."""

    n = np.atleast_2d(np.asarray(n, dtype=np.complex128))
    if n.ndim != 2 or n.shape[1] != a.dims[2]:
        raise DimensionMismatchError(f"matrix with shape {n.shape} cannot act on {a.dims[2]} frontal slices")
    return Tensor3(np.einsum("jk,abk->abj", n, a.data))


def transform(a: Tensor3, m: TransformMatrix) -> TransformedTensor:
    _check_transform(a.dims, m)
    return TransformedTensor(np.einsum("ik,abk->iab", m.m, a.data))


def inverse_transform(a_hat: TransformedTensor, m: TransformMatrix) -> Tensor3:
    _check_transform(a_hat.dims, m)
    return Tensor3(np.einsum("ki,iab->abk", m.m_inverse, a_hat.slices))


def _facewise(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Slice-wise product of two ``(n3, rows, cols)`` stacks."""

    if left.shape[0] != right.shape[0]:
        raise DimensionMismatchError(f"slice counts differ: {left.shape[0]} vs {right.shape[0]}")
    if left.shape[2] != right.shape[1]:
        raise DimensionMismatchError(f"inner dimensions differ: {left.shape[2]} vs {right.shape[1]}")
    return np.matmul(left, right)


def facewise_product(a, b):
    """Multiply matching frontal slices; accepts two ``Tensor3`` or two ``TransformedTensor``."""

    if isinstance(a, TransformedTensor) and isinstance(b, TransformedTensor):
        return TransformedTensor(_facewise(a.slices, b.slices))
    if isinstance(a, Tensor3) and isinstance(b, Tensor3):
        stacked = _facewise(a.data.transpose(2, 0, 1), b.data.transpose(2, 0, 1))
        return Tensor3(stacked.transpose(1, 2, 0))
    raise TypeError("facewise_product needs two tensors of the same kind")


def m_product(a: Tensor3, b: Tensor3, m: TransformMatrix) -> Tensor3:
    return inverse_transform(facewise_product(transform(a, m), transform(b, m)), m)


def m_product_chain(tensors: Sequence[Tensor3], m: TransformMatrix) -> Tensor3:
    """Left-to-right M-product of several tensors with a single round trip through the transform."""

    if not tensors:
        raise ValueError("m_product_chain needs at least one tensor")
    stack = transform(tensors[0], m).slices
    for tensor in tensors[1:]:
        stack = _facewise(stack, transform(tensor, m).slices)
    return inverse_transform(TransformedTensor(stack), m)


def m_product_via_matt(a: Tensor3, b: Tensor3, m: TransformMatrix) -> Tensor3:
    """M-product evaluated as a product of block-diagonal matrices."""

    a_hat, b_hat = transform(a, m), transform(b, m)
    if a.dims[1] != b.dims[0]:
        raise DimensionMismatchError(f"inner dimensions differ: {a.dims[1]} vs {b.dims[0]}")
    dims = (a.dims[0], b.dims[1], a.dims[2])
    return inverse_transform(TransformedTensor.from_matt(a_hat.matt() @ b_hat.matt(), dims), m)


def identity_tensor(n: int, eta3: int, m: TransformMatrix) -> Tensor3:
    if n < 1 or eta3 < 1:
        raise ValueError("identity tensor dimensions must be positive")
    _check_transform((n, n, eta3), m)
    slices = np.broadcast_to(np.eye(n, dtype=np.complex128), (eta3, n, n))
    return inverse_transform(TransformedTensor(slices), m)


def conj_transpose(a: Tensor3, m: TransformMatrix) -> Tensor3:
    a_hat = transform(a, m)
    return inverse_transform(TransformedTensor(np.conj(a_hat.slices).transpose(0, 2, 1)), m)


def tensor_power(a: Tensor3, p: int, m: TransformMatrix) -> Tensor3:
    if not a.is_square:
        raise DimensionMismatchError(f"tensor power needs a square tensor, got dims {a.dims}")
    if p < 0:
        raise ValueError("tensor power must be nonnegative")
    a_hat = transform(a, m)
    return inverse_transform(TransformedTensor(np.linalg.matrix_power(a_hat.slices, p)), m)


def apply_slicewise(a: Tensor3, m: TransformMatrix, func: Callable[[np.ndarray], np.ndarray]) -> Tensor3:
    """Apply a matrix function to each transformed slice and fold the results back."""

    a_hat = transform(a, m)
    results = []
    for index, matrix in enumerate(a_hat.slices):
        LOGGER.debug("Processing transformed slice %d of %d", index + 1, a.dims[2])
        results.append(func(matrix))
    return inverse_transform(TransformedTensor(np.stack(results, axis=0)), m)

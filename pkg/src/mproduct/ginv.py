"""Generalized inverses of square tensors under the M-product.

Every inverse is computed on the transformed slices and folded back once:

* ``gd_inverse``      P blockdiag(U^-1, N^+) P^-1 per slice
* ``drazin_inverse``  P blockdiag(U^-1, 0) P^-1 per slice
* ``gdmp_inverse``    A^GD A A^+
* ``gdstar_inverse``  A^GD A A^*
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np
import scipy.linalg

from . import kernels
from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import DimensionMismatchError, NumericalFailureError, SingularSliceError
from .tensor import (
    Tensor3,
    TransformedTensor,
    TransformMatrix,
    apply_slicewise,
    inverse_transform,
    transform,
)


LOGGER = logging.getLogger(__name__)


class InverseKind(str, Enum):
    GD = "gd"
    GDMP = "gdmp"
    GDSTAR = "gdstar"
    MP = "mp"
    DRAZIN = "drazin"
    INVERSE = "inverse"


def _require_square(a: Tensor3) -> None:
    if not a.is_square:
        raise DimensionMismatchError(f"expected a square tensor, got dims {a.dims}")


@dataclass(frozen=True, eq=False)
class TensorCoreNilpotent:
    """Core-nilpotent decomposition of a tensor, held as one factorization per transformed slice."""

    p: Tensor3
    factors: Tuple[kernels.CoreNilpotentFactors, ...]
    k: int

    def block_tensor(self, m: TransformMatrix) -> Tensor3:
        """The tensor whose transformed slices are ``blockdiag(U(i), N(i))``."""

        blocks = [
            np.block(
                [
                    [f.u, np.zeros((f.rank, f.n_part.shape[0]))],
                    [np.zeros((f.n_part.shape[0], f.rank)), f.n_part],
                ]
            )
            for f in self.factors
        ]
        return inverse_transform(TransformedTensor(np.stack(blocks, axis=0)), m)

    def reconstruct(self, m: TransformMatrix) -> Tensor3:
        return inverse_transform(TransformedTensor(np.stack([f.reconstruct() for f in self.factors])), m)

    def reconstruction_residual(self, a: Tensor3, m: TransformMatrix) -> float:
        return kernels.relative_residual(self.reconstruct(m).data, a.data)


def tensor_index(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> int:
    return max(slice_indices(a, m, tol))


def slice_indices(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tuple[int, ...]:
    """Index of every transformed slice, in slice order."""

    _require_square(a)
    indices = tuple(kernels.matrix_index(matrix, tol) for matrix in transform(a, m).slices)
    LOGGER.debug("Transformed slice indices: %s", indices)
    return indices


def tensor_core_nilpotent(
    a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> TensorCoreNilpotent:
    _require_square(a)
    factors = tuple(kernels.core_nilpotent_decompose(matrix, tol) for matrix in transform(a, m).slices)
    p = inverse_transform(TransformedTensor(np.stack([f.p for f in factors], axis=0)), m)
    core = TensorCoreNilpotent(p=p, factors=factors, k=max(f.k for f in factors))

    residual = core.reconstruction_residual(a, m)
    if residual > tol.residual_tol:
        raise NumericalFailureError(f"tensor core-nilpotent reconstruction residual {residual:.3e}")
    return core


def mp_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    return apply_slicewise(a, m, lambda matrix: kernels.mp_inverse_matrix(matrix, tol))


def drazin_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    _require_square(a)
    return apply_slicewise(a, m, lambda matrix: kernels.matrix_drazin_inverse(matrix, tol))


def gd_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    """Canonical GD inverse: the nilpotent block of every slice is replaced by its MP inverse."""

    _require_square(a)
    return apply_slicewise(a, m, lambda matrix: kernels.matrix_gd_inverse(matrix, tol))


def gd_inverse_from_blocks(
    core: TensorCoreNilpotent,
    n_minus_blocks: Sequence[np.ndarray],
    m: TransformMatrix,
) -> Tensor3:
    """GD inverse built from caller-chosen {1}-inverses of the nilpotent blocks."""

    if len(n_minus_blocks) != len(core.factors):
        raise DimensionMismatchError(
            f"got {len(n_minus_blocks)} nilpotent {{1}}-inverses for {len(core.factors)} slices"
        )
    slices = [kernels.matrix_gd_inverse_from(f, n_minus) for f, n_minus in zip(core.factors, n_minus_blocks)]
    return inverse_transform(TransformedTensor(np.stack(slices, axis=0)), m)


def gdmp_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    _require_square(a)

    def body(matrix: np.ndarray) -> np.ndarray:
        return kernels.matrix_gd_inverse(matrix, tol) @ matrix @ kernels.mp_inverse_matrix(matrix, tol)

    return apply_slicewise(a, m, body)


def gdstar_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    _require_square(a)

    def body(matrix: np.ndarray) -> np.ndarray:
        return kernels.matrix_gd_inverse(matrix, tol) @ matrix @ matrix.conj().T

    return apply_slicewise(a, m, body)


def tensor_inverse(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> Tensor3:
    _require_square(a)
    inverses = []
    for index, matrix in enumerate(transform(a, m).slices):
        if kernels.numerical_rank(matrix, tol) < matrix.shape[0]:
            raise SingularSliceError(index)
        inverses.append(scipy.linalg.inv(matrix))
    return inverse_transform(TransformedTensor(np.stack(inverses, axis=0)), m)


def compute_inverse(
    kind: InverseKind | str,
    a: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
) -> Tensor3:
    """Dispatch to the inverse named by ``kind``."""

    kind = InverseKind(kind)
    LOGGER.debug("Computing %s inverse of a %s tensor", kind.value, "x".join(map(str, a.dims)))
    return _DISPATCH[kind](a, m, tol)


_DISPATCH = {
    InverseKind.GD: gd_inverse,
    InverseKind.GDMP: gdmp_inverse,
    InverseKind.GDSTAR: gdstar_inverse,
    InverseKind.MP: mp_inverse,
    InverseKind.DRAZIN: drazin_inverse,
    InverseKind.INVERSE: tensor_inverse,
}

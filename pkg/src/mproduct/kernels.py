"""Dense complex matrix kernels applied to each transformed slice."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import ContractViolationError, DimensionMismatchError, NumericalFailureError


LOGGER = logging.getLogger(__name__)


def relative_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """``||lhs - rhs||_F / (1 + ||rhs||_F)``."""

    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    if lhs.shape != rhs.shape:
        raise DimensionMismatchError(f"cannot compare shapes {lhs.shape} and {rhs.shape}")
    return float(np.linalg.norm((lhs - rhs).ravel()) / (1.0 + np.linalg.norm(rhs.ravel())))


def _require_square(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    return a


def _inverse(a: np.ndarray) -> np.ndarray:
    if a.size == 0:
        return np.zeros_like(a)
    return scipy.linalg.inv(a)


def _spectral_norm(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return float(scipy.linalg.svdvals(a)[0])


@dataclass(frozen=True, eq=False)
class CoreNilpotentFactors:
    """``a = p @ blockdiag(u, n_part) @ inv(p)`` with ``u`` invertible and ``n_part`` nilpotent."""

    p: np.ndarray
    u: np.ndarray
    n_part: np.ndarray
    k: int

    @property
    def rank(self) -> int:
        """Size of the invertible core block."""

        return int(self.u.shape[0])

    def reconstruct(self) -> np.ndarray:
        return self.p @ scipy.linalg.block_diag(self.u, self.n_part) @ _inverse(self.p)


def numerical_rank(
    a: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    reference_norm: Optional[float] = None,
) -> int:
    """Count singular values above the rank threshold.

    With ``reference_norm`` the threshold is measured against the larger of ``a``'s own
    spectral norm and the reference, so a power of a nilpotent matrix that is pure
    round-off has rank zero.
    """

    a = np.asarray(a, dtype=np.complex128)
    if a.size == 0:
        return 0
    singular_values = scipy.linalg.svdvals(a)
    scale = max(float(singular_values[0]), reference_norm or 0.0)
    threshold = tol.rank_threshold(a.shape, scale)
    return int(np.count_nonzero(singular_values > threshold))


def matrix_index(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> int:
    """Smallest k >= 0 with rank(a^k) == rank(a^(k+1)), capped at the matrix order."""

    a = _require_square(a)
    n = a.shape[0]
    norm = _spectral_norm(a)
    power = np.eye(n, dtype=np.complex128)
    previous_rank = n
    for k in range(n + 1):
        power = power @ a
        current_rank = numerical_rank(power, tol, reference_norm=norm ** (k + 1))
        if current_rank == previous_rank:
            return k
        previous_rank = current_rank
    return n


def core_nilpotent_decompose(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> CoreNilpotentFactors:
    """Split ``a`` into its invertible core and nilpotent part.

    ``p = [X | Y]`` where X spans the range of ``a^k`` and Y spans its null space, both taken
    as orthonormal singular-vector bases of ``a^k`` with ``k = matrix_index(a)``.
    """

    a = _require_square(a)
    n = a.shape[0]
    k = matrix_index(a, tol)
    a_k = np.linalg.matrix_power(a, k)

    norm = _spectral_norm(a)
    left, singular_values, right_h = scipy.linalg.svd(a_k)
    scale = max(float(singular_values[0]), norm**k) if n else 0.0
    threshold = tol.rank_threshold(a_k.shape, scale)
    r = int(np.count_nonzero(singular_values > threshold))

    range_basis = left[:, :r]
    null_basis = right_h[r:].conj().T
    p = np.hstack([range_basis, null_basis])
    block = scipy.linalg.solve(p, a @ p)
    factors = CoreNilpotentFactors(p=p, u=block[:r, :r], n_part=block[r:, r:], k=k)

    reconstruction = relative_residual(factors.reconstruct(), a)
    LOGGER.debug("Core-nilpotent split: n=%d, index=%d, core rank=%d, residual=%.3e", n, k, r, reconstruction)
    if reconstruction > tol.residual_tol:
        raise NumericalFailureError(
            f"core-nilpotent reconstruction residual {reconstruction:.3e} exceeds {tol.residual_tol:.1e}"
        )
    if r and float(scipy.linalg.svdvals(factors.u)[-1]) <= tol.rank_threshold(a.shape, norm):
        raise NumericalFailureError("core block of the decomposition is numerically singular")
    if k and n > r:
        leak = float(np.linalg.norm(np.linalg.matrix_power(factors.n_part, k)))
        # Round-off in N^k grows like ||a||^k.
        if leak > tol.residual_tol * (1.0 + norm) ** k:
            raise NumericalFailureError(f"nilpotent block is not nilpotent of order {k} (residual {leak:.3e})")
    return factors


def mp_inverse_matrix(
    a: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    reference_norm: Optional[float] = None,
) -> np.ndarray:
    """Moore-Penrose inverse via a rank-truncated SVD.

    ``reference_norm`` lets a caller measure the truncation threshold against a larger
    matrix the argument was cut out of, so round-off blocks are treated as zero.
    """

    a = np.atleast_2d(np.asarray(a, dtype=np.complex128))
    if a.size == 0:
        return np.zeros((a.shape[1], a.shape[0]), dtype=np.complex128)
    if reference_norm is None:
        return scipy.linalg.pinv(a, atol=0.0, rtol=tol.rank_tol_factor * max(a.shape))
    atol = tol.rank_threshold(a.shape, reference_norm)
    return scipy.linalg.pinv(a, atol=atol, rtol=tol.rank_tol_factor * max(a.shape))


def one_inverse_nilpotent(
    n_part: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    reference_norm: Optional[float] = None,
) -> np.ndarray:
    """Canonical {1}-inverse of a nilpotent block: its Moore-Penrose inverse.

    The nilpotency check on ``N^order`` is scaled by ``reference_norm ** order`` when given,
    otherwise by the block's own spectral norm to that power.
    """

    n_part = np.asarray(n_part, dtype=np.complex128)
    if n_part.size == 0:
        return n_part.copy()
    n_part = _require_square(n_part)
    order = n_part.shape[0]
    scale = _spectral_norm(n_part) if reference_norm is None else reference_norm
    top_power = float(np.linalg.norm(np.linalg.matrix_power(n_part, order)))
    if top_power > tol.residual_tol * (1.0 + scale) ** order:
        raise ContractViolationError(f"block is not nilpotent: ||N^{order}||_F = {top_power:.3e}")
    return mp_inverse_matrix(n_part, tol, reference_norm=reference_norm)


def matrix_gd_inverse_from(factors: CoreNilpotentFactors, n_minus: np.ndarray) -> np.ndarray:
    """Assemble ``p @ blockdiag(inv(u), n_minus) @ inv(p)`` for a chosen {1}-inverse of the nilpotent block."""

    n_minus = np.asarray(n_minus, dtype=np.complex128)
    if n_minus.shape != factors.n_part.shape[::-1]:
        raise DimensionMismatchError(
            f"{{1}}-inverse has shape {n_minus.shape}, nilpotent block has shape {factors.n_part.shape}"
        )
    middle = scipy.linalg.block_diag(_inverse(factors.u), n_minus)
    return factors.p @ middle @ _inverse(factors.p)


def matrix_gd_inverse(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> np.ndarray:
    a = _require_square(a)
    factors = core_nilpotent_decompose(a, tol)
    n_minus = one_inverse_nilpotent(factors.n_part, tol, reference_norm=_spectral_norm(a))
    return matrix_gd_inverse_from(factors, n_minus)


def matrix_drazin_inverse(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> np.ndarray:
    a = _require_square(a)
    factors = core_nilpotent_decompose(a, tol)
    return matrix_gd_inverse_from(factors, np.zeros_like(factors.n_part))


def drazin_limit_oracle(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> np.ndarray:
    """Independent Drazin formula ``a^k (a^(2k+1))^+ a^k``."""

    a = _require_square(a)
    k = matrix_index(a, tol)
    a_k = np.linalg.matrix_power(a, k)
    return a_k @ mp_inverse_matrix(np.linalg.matrix_power(a, 2 * k + 1), tol) @ a_k

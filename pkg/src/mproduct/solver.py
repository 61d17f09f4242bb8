"""Solution families of the consistent multilinear systems A X = A S B.

``S`` is A^GD, A^+ or A^* depending on the kind; the general solution is
``X = inverse B + (I - A^GD A) Z`` with ``inverse`` the GD, GDMP or GD-Star inverse.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import ginv
from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import DimensionMismatchError, NumericalFailureError
from .ginv import InverseKind
from .laws import ResidualReport, residual
from .tensor import Tensor3, TransformMatrix, conj_transpose, identity_tensor, m_product_chain


LOGGER = logging.getLogger(__name__)

SOLVABLE_KINDS = (InverseKind.GD, InverseKind.GDMP, InverseKind.GDSTAR)


def _solvable_kind(kind: InverseKind | str) -> InverseKind:
    kind = InverseKind(kind)
    if kind not in SOLVABLE_KINDS:
        raise ValueError(f"solver supports gd, gdmp and gdstar, not {kind.value}")
    return kind


def _check_system(a: Tensor3, b: Tensor3) -> None:
    n1, n2, n3 = a.dims
    if n1 != n2:
        raise DimensionMismatchError(f"coefficient tensor must be square, got dims {a.dims}")
    if b.dims[0] != n1 or b.dims[2] != n3:
        raise DimensionMismatchError(f"right-hand side dims {b.dims} do not fit coefficient dims {a.dims}")


@dataclass(frozen=True, eq=False)
class SolveRequest:
    """Coefficient tensor, right-hand side and free parameter of one system."""

    a: Tensor3
    b: Tensor3
    z: Optional[Tensor3] = None
    kind: InverseKind = InverseKind.GD

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", _solvable_kind(self.kind))
        _check_system(self.a, self.b)
        if self.z is None:
            object.__setattr__(self, "z", Tensor3.zeros(self.b.dims))
        elif self.z.dims != self.b.dims:
            raise DimensionMismatchError(f"free parameter dims {self.z.dims} differ from right-hand side {self.b.dims}")


@dataclass(frozen=True, eq=False)
class SolveResult:
    x: Tensor3
    residual: float
    inverse_used: Tensor3
    gd_used: Tensor3
    kind: InverseKind


def assemble_solution(
    a: Tensor3,
    b: Tensor3,
    z: Tensor3,
    inverse: Tensor3,
    gd: Tensor3,
    m: TransformMatrix,
) -> Tensor3:
    """``X = inverse B + (I - gd A) Z`` for caller-supplied inverses."""

    _check_system(a, b)
    if inverse.dims != a.dims or gd.dims != a.dims:
        raise DimensionMismatchError("inverses must have the dims of the coefficient tensor")
    projector = identity_tensor(a.dims[0], a.dims[2], m) - m_product_chain([gd, a], m)
    return m_product_chain([inverse, b], m) + m_product_chain([projector, z], m)


def equation_target(
    a: Tensor3,
    b: Tensor3,
    m: TransformMatrix,
    kind: InverseKind | str,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    gd: Optional[Tensor3] = None,
) -> Tensor3:
    """Right-hand side of the system solved for ``kind``."""

    kind = _solvable_kind(kind)
    _check_system(a, b)
    if kind is InverseKind.GD:
        middle = ginv.gd_inverse(a, m, tol) if gd is None else gd
    elif kind is InverseKind.GDMP:
        middle = ginv.mp_inverse(a, m, tol)
    else:
        middle = conj_transpose(a, m)
    return m_product_chain([a, middle, b], m)


def _solve_with(
    req: SolveRequest, m: TransformMatrix, tol: ToleranceConfig, gd: Tensor3, inverse: Tensor3
) -> SolveResult:
    x = assemble_solution(req.a, req.b, req.z, inverse, gd, m)
    target = equation_target(req.a, req.b, m, req.kind, tol, gd=gd)
    value = residual(m_product_chain([req.a, x], m), target)
    return SolveResult(x=x, residual=value, inverse_used=inverse, gd_used=gd, kind=req.kind)


def _inverses(req: SolveRequest, m: TransformMatrix, tol: ToleranceConfig) -> Tuple[Tensor3, Tensor3]:
    """GD inverse for the projector and the kind's inverse, built on that same GD inverse."""

    gd = ginv.gd_inverse(req.a, m, tol)
    if req.kind is InverseKind.GD:
        return gd, gd
    if req.kind is InverseKind.GDMP:
        tail = ginv.mp_inverse(req.a, m, tol)
    else:
        tail = conj_transpose(req.a, m)
    return gd, m_product_chain([gd, req.a, tail], m)


def solve(req: SolveRequest, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> SolveResult:
    gd, inverse = _inverses(req, m, tol)
    result = _solve_with(req, m, tol, gd, inverse)
    LOGGER.debug("Solved %s system with residual %.3e", req.kind.value, result.residual)
    if result.residual > tol.residual_tol:
        raise NumericalFailureError(
            f"{req.kind.value} solution residual {result.residual:.3e} exceeds {tol.residual_tol:.1e}"
        )
    return result


def solution_family_check(
    req: SolveRequest,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    trials: int = 10,
    *,
    seed: Optional[int] = None,
) -> ResidualReport:
    """Solve the system for ``trials`` random free parameters and report each residual."""

    if trials < 1:
        raise ValueError("trials must be positive")
    rng = np.random.default_rng(seed)
    gd, inverse = _inverses(req, m, tol)

    entries = []
    for trial in range(trials):
        z = Tensor3(rng.standard_normal(req.b.dims) + 1j * rng.standard_normal(req.b.dims))
        trial_req = SolveRequest(a=req.a, b=req.b, z=z, kind=req.kind)
        entries.append((f"trial {trial}", _solve_with(trial_req, m, tol, gd, inverse).residual))
    report = ResidualReport(entries=tuple(entries), tol=tol.residual_tol)
    LOGGER.debug("Solution family check over %d trials: max residual %.3e", trials, report.max_residual)
    return report


def rhs_consistency(
    a: Tensor3,
    d: Tensor3,
    m: TransformMatrix,
    kind: InverseKind | str,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
) -> ResidualReport:
    """Report whether a user right-hand side already lies in the range the system projects onto."""

    kind = _solvable_kind(kind)
    _check_system(a, d)
    if kind is InverseKind.GD:
        label, projected = "AA^GD D = D", m_product_chain([a, ginv.gd_inverse(a, m, tol), d], m)
    else:
        label, projected = "AA^+ D = D", m_product_chain([a, ginv.mp_inverse(a, m, tol), d], m)
    return ResidualReport(entries=((label, residual(projected, d)),), tol=tol.residual_tol)

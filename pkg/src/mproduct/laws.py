"""Residual-based verification of generalized-inverse equations and their algebraic laws."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from . import ginv
from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import ContractViolationError, DimensionMismatchError
from .ginv import InverseKind
from .kernels import relative_residual
from .tensor import Tensor3, TransformMatrix, conj_transpose, identity_tensor, m_product_chain, tensor_power


LOGGER = logging.getLogger(__name__)

CANONICAL_GD_NOTE = "GD inverses inside hypotheses are the canonical ones (nilpotent block replaced by its MP inverse)"


def residual(lhs: Tensor3, rhs: Tensor3) -> float:
    return relative_residual(lhs.data, rhs.data)


@dataclass(frozen=True)
class ResidualReport:
    """Named relative residuals of an equation system checked against one tolerance."""

    entries: Tuple[Tuple[str, float], ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(value <= self.tol for _, value in self.entries)

    @property
    def max_residual(self) -> float:
        return max((value for _, value in self.entries), default=0.0)

    def failing(self) -> List[str]:
        return [label for label, value in self.entries if value > self.tol]

    def residual_of(self, label: str) -> float:
        for name, value in self.entries:
            if name == label:
                return value
        raise KeyError(label)

    def to_dict(self) -> Dict[str, object]:
        return {
            "entries": [{"label": label, "residual": value} for label, value in self.entries],
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class LawOutcome:
    """Hypotheses of a law and, when they hold, its conclusion."""

    hypotheses: ResidualReport
    conclusion: Optional[ResidualReport]
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def applicable(self) -> bool:
        return self.hypotheses.passed

    @property
    def holds(self) -> bool:
        """False only for an applicable law whose conclusion fails."""

        return not self.applicable or (self.conclusion is not None and self.conclusion.passed)

    def to_dict(self) -> Dict[str, object]:
        return {
            "applicable": self.applicable,
            "hypotheses": self.hypotheses.to_dict(),
            "conclusion": None if self.conclusion is None else self.conclusion.to_dict(),
            "notes": list(self.notes),
        }


class GDOrderVariant(str, Enum):
    """Product laws for the GD inverse."""

    SQUARE_COMMUTING = "square-commuting"  # (AB)^GD = B^GD A^GD under AB^2 = B^2A = BAB
    COMMUTING = "commuting"  # (AB)^GD = B^GD A^GD under AB = BA
    FORWARD = "forward"  # (AB)^GD = A^GD B^GD


class ProductDirection(str, Enum):
    REVERSE = "reverse"
    FORWARD = "forward"


class _Algebra:
    """Shorthand for M-products, powers and adjoints over one transform."""

    def __init__(self, m: TransformMatrix, tol: ToleranceConfig) -> None:
        self.m = m
        self.tol = tol
        # Values keep their key tensor alive so ids stay unique.
        self._cache: Dict[Tuple[int, str], Tuple[Tensor3, Tensor3]] = {}

    def __call__(self, *tensors: Tensor3) -> Tensor3:
        return m_product_chain(tensors, self.m)

    def pow(self, a: Tensor3, p: int) -> Tensor3:
        return tensor_power(a, p, self.m)

    def star(self, a: Tensor3) -> Tensor3:
        return conj_transpose(a, self.m)

    def identity(self, a: Tensor3) -> Tensor3:
        return identity_tensor(a.dims[0], a.dims[2], self.m)

    def zero(self, a: Tensor3) -> Tensor3:
        return Tensor3.zeros(a.dims)

    def _inverse(self, kind: InverseKind, a: Tensor3) -> Tensor3:
        key = (id(a), kind.value)
        if key not in self._cache:
            self._cache[key] = (a, ginv.compute_inverse(kind, a, self.m, self.tol))
        return self._cache[key][1]

    def gd(self, a: Tensor3) -> Tensor3:
        return self._inverse(InverseKind.GD, a)

    def mp(self, a: Tensor3) -> Tensor3:
        return self._inverse(InverseKind.MP, a)

    def drazin(self, a: Tensor3) -> Tensor3:
        return self._inverse(InverseKind.DRAZIN, a)

    def gdmp(self, a: Tensor3) -> Tensor3:
        return self._inverse(InverseKind.GDMP, a)

    def gdstar(self, a: Tensor3) -> Tensor3:
        return self._inverse(InverseKind.GDSTAR, a)


class _ReportBuilder:
    def __init__(self, tol: float) -> None:
        self.tol = tol
        self.entries: List[Tuple[str, float]] = []

    def add(self, label: str, lhs: Tensor3, rhs: Tensor3) -> None:
        self.entries.append((label, residual(lhs, rhs)))

    def extend(self, report: ResidualReport, prefix: str = "") -> None:
        self.entries.extend((prefix + label, value) for label, value in report.entries)

    def build(self) -> ResidualReport:
        return ResidualReport(entries=tuple(self.entries), tol=self.tol)


def _require_pair(a: Tensor3, x: Tensor3) -> None:
    if not a.is_square:
        raise DimensionMismatchError(f"expected a square tensor, got dims {a.dims}")
    if a.dims != x.dims:
        raise DimensionMismatchError(f"candidate dims {x.dims} differ from tensor dims {a.dims}")


def _resolve_power(a: Tensor3, m: TransformMatrix, tol: ToleranceConfig, k: Optional[int]) -> int:
    index = ginv.tensor_index(a, m, tol)
    if k is None:
        return index
    if k < index:
        raise ContractViolationError(f"power k={k} is below the tensor index {index}")
    return k


def verify_gd(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    k: Optional[int] = None,
) -> ResidualReport:
    """Check AXA = A, XA^(k+1) = A^k and A^(k+1)X = A^k."""

    _require_pair(a, x)
    alg = _Algebra(m, tol)
    k = _resolve_power(a, m, tol, k)
    a_k, a_k1 = alg.pow(a, k), alg.pow(a, k + 1)

    report = _ReportBuilder(tol.residual_tol)
    report.add("AXA = A", alg(a, x, a), a)
    report.add("XA^(k+1) = A^k", alg(x, a_k1), a_k)
    report.add("A^(k+1)X = A^k", alg(a_k1, x), a_k)
    return report.build()


def verify_mp(a: Tensor3, x: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES) -> ResidualReport:
    """The four Penrose equations."""

    if x.dims != (a.dims[1], a.dims[0], a.dims[2]):
        raise DimensionMismatchError(f"candidate dims {x.dims} do not transpose tensor dims {a.dims}")
    alg = _Algebra(m, tol)
    ax, xa = alg(a, x), alg(x, a)

    report = _ReportBuilder(tol.residual_tol)
    report.add("AXA = A", alg(ax, a), a)
    report.add("XAX = X", alg(xa, x), x)
    report.add("(AX)^* = AX", alg.star(ax), ax)
    report.add("(XA)^* = XA", alg.star(xa), xa)
    return report.build()


def verify_drazin(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    k: Optional[int] = None,
) -> ResidualReport:
    _require_pair(a, x)
    alg = _Algebra(m, tol)
    k = _resolve_power(a, m, tol, k)

    report = _ReportBuilder(tol.residual_tol)
    report.add("XA^(k+1) = A^k", alg(x, alg.pow(a, k + 1)), alg.pow(a, k))
    report.add("XAX = X", alg(x, a, x), x)
    report.add("AX = XA", alg(a, x), alg(x, a))
    return report.build()


def verify_inverse(
    a: Tensor3, x: Tensor3, m: TransformMatrix, tol: ToleranceConfig = DEFAULT_TOLERANCES
) -> ResidualReport:
    _require_pair(a, x)
    alg = _Algebra(m, tol)
    eye = alg.identity(a)

    report = _ReportBuilder(tol.residual_tol)
    report.add("AX = I", alg(a, x), eye)
    report.add("XA = I", alg(x, a), eye)
    return report.build()


def characterize_gd(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
) -> List[Tuple[str, ResidualReport]]:
    """Four equivalent characterizations of a GD inverse; for any candidate they pass or fail together."""

    _require_pair(a, x)
    alg = _Algebra(m, tol)
    k = ginv.tensor_index(a, m, tol)
    a_k = alg.pow(a, k)
    a_d = alg.drazin(a)
    axa = alg(a, x, a)

    commuting_power = _ReportBuilder(tol.residual_tol)
    commuting_power.add("AXA = A", axa, a)
    commuting_power.add("A^k X = X A^k", alg(a_k, x), alg(x, a_k))

    drazin_projector = _ReportBuilder(tol.residual_tol)
    drazin_projector.add("AXA = A", axa, a)
    drazin_projector.add("A^D A X = X A^D A", alg(a_d, a, x), alg(x, a_d, a))

    drazin_square = _ReportBuilder(tol.residual_tol)
    a_ad = alg(a, a_d)
    a_d_a2 = alg(a_d, a, a)
    drazin_square.add("AXA = A", axa, a)
    drazin_square.add("A^D A^2 X = A A^D", alg(a_d_a2, x), a_ad)
    drazin_square.add("X A^D A^2 = A A^D", alg(x, a_d_a2), a_ad)

    return [
        ("definition", verify_gd(a, x, m, tol, k=k)),
        ("commuting-power", commuting_power.build()),
        ("drazin-projector", drazin_projector.build()),
        ("drazin-square", drazin_square.build()),
    ]


def verify_gdmp(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    k: Optional[int] = None,
    gd: Optional[Tensor3] = None,
) -> ResidualReport:
    """Defining system of A^GD A A^+ together with its four-equation form."""

    _require_pair(a, x)
    alg = _Algebra(m, tol)
    k = _resolve_power(a, m, tol, k)
    gd = alg.gd(a) if gd is None else gd
    a_k, a_k1 = alg.pow(a, k), alg.pow(a, k + 1)
    ax = alg(a, x)

    report = _ReportBuilder(tol.residual_tol)
    report.add("XAX = X", alg(x, ax), x)
    report.add("AX = AA^+", ax, alg(a, alg.mp(a)))
    report.add("XA^k = A^GD A^k", alg(x, a_k), alg(gd, a_k))
    report.add("AXA = A", alg(ax, a), a)
    report.add("(AX)^* = AX", alg.star(ax), ax)
    report.add("XA^(k+1) = A^k", alg(x, a_k1), a_k)
    return report.build()


def check_gdmp_properties(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    c: int = 1,
    k: Optional[int] = None,
    gd: Optional[Tensor3] = None,
) -> ResidualReport:
    """Identities every GDMP inverse satisfies; ``c`` is any positive power."""

    _require_pair(a, x)
    if c < 1:
        raise ValueError("power c must be positive")
    alg = _Algebra(m, tol)
    k = _resolve_power(a, m, tol, k)
    gd = alg.gd(a) if gd is None else gd
    a_mp = alg.mp(a)
    a_c, a_k, a_k1, a_k2 = alg.pow(a, c), alg.pow(a, k), alg.pow(a, k + 1), alg.pow(a, k + 2)

    report = _ReportBuilder(tol.residual_tol)
    report.add("X = A^GD AX", alg(gd, a, x), x)
    report.add("AXA = A", alg(a, x, a), a)
    report.add("XAX = X", alg(x, a, x), x)
    report.add("A^c X = A^c A^+", alg(a_c, x), alg(a_c, a_mp))
    report.add("XA^c = A^GD A^c", alg(x, a_c), alg(gd, a_c))
    report.add("XA^(k+1) = A^k", alg(x, a_k1), a_k)
    report.add("AXA^(k+1) = A^(k+1)", alg(a, x, a_k1), a_k1)
    report.add("A^(k+1)X = A^k AA^+", alg(a_k1, x), alg(a_k, a, a_mp))
    report.add("XA^(k+2)X = A^(k+1)A^+", alg(x, a_k2, x), alg(a_k1, a_mp))
    return report.build()


def verify_gdstar(
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    k: Optional[int] = None,
    gd: Optional[Tensor3] = None,
) -> ResidualReport:
    """Defining system of A^GD A A^* plus the identities it implies.

    Only ``X(A^+)^* = A^GD A`` depends on which GD inverse is meant; ``gd`` selects it and
    defaults to the canonical one.
    """

    _require_pair(a, x)
    alg = _Algebra(m, tol)
    k = _resolve_power(a, m, tol, k)
    gd = alg.gd(a) if gd is None else gd
    a_star = alg.star(a)
    a_mp = alg.mp(a)
    mp_star = alg.star(a_mp)
    a_k = alg.pow(a, k)
    ax = alg(a, x)
    x_mp_star = alg(x, mp_star)
    mp_a_xx = alg(a_mp, a, x, x)

    report = _ReportBuilder(tol.residual_tol)
    report.add("X(A^+)^*X = X", alg(x_mp_star, x), x)
    report.add("AX = AA^*", ax, alg(a, a_star))
    report.add("A^k X = A^k A^*", alg(a_k, x), alg(a_k, a_star))
    report.add("X(A^+)^* = A^GD A", x_mp_star, alg(gd, a))
    report.add("AX(A^+)^* = A", alg(a, x_mp_star), a)
    report.add("A^+ AX = A^*", alg(a_mp, ax), a_star)
    report.add("A^k X(A^+)^* = A^k", alg(a_k, x_mp_star), a_k)
    report.add("X(A^+)^* A^k = A^k", alg(x_mp_star, a_k), a_k)
    report.add("A^+ AX^2 = A^* X", mp_a_xx, alg(a_star, x))
    report.add("A^+ AX^2 AA^+ = A^* X", alg(mp_a_xx, a, a_mp), alg(a_star, x))
    report.add("(AX)^* = AX", alg.star(ax), ax)
    report.add("(A^+)^* X(A^+)^* = (A^+)^*", alg(mp_star, x_mp_star), mp_star)
    return report.build()


def _require_law_pair(a: Tensor3, b: Tensor3) -> None:
    if not a.is_square or a.dims != b.dims:
        raise DimensionMismatchError(f"law checks need two square tensors of equal dims, got {a.dims} and {b.dims}")


def _outcome(
    hypotheses: ResidualReport,
    conclude,
    law: str,
    notes: Sequence[str] = (),
) -> LawOutcome:
    if not hypotheses.passed:
        LOGGER.debug("%s not applicable; failing hypotheses: %s", law, ", ".join(hypotheses.failing()))
        return LawOutcome(hypotheses=hypotheses, conclusion=None, notes=tuple(notes))

    conclusion = conclude()
    if not conclusion.passed:
        LOGGER.warning("%s is applicable but its conclusion fails: %s", law, ", ".join(conclusion.failing()))
    return LawOutcome(hypotheses=hypotheses, conclusion=conclusion, notes=tuple(notes))


def check_gd_reverse_order(
    a: Tensor3,
    b: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    variant: GDOrderVariant | str = GDOrderVariant.COMMUTING,
) -> LawOutcome:
    """Product laws (AB)^GD = B^GD A^GD or A^GD B^GD under the variant's hypotheses."""

    _require_law_pair(a, b)
    variant = GDOrderVariant(variant)
    alg = _Algebra(m, tol)
    a_gd, b_gd = alg.gd(a), alg.gd(b)
    b_bgd = alg(b, b_gd)

    hyp = _ReportBuilder(tol.residual_tol)
    if variant is GDOrderVariant.SQUARE_COMMUTING:
        b2 = alg(b, b)
        hyp.add("AB^2 = B^2A", alg(a, b2), alg(b2, a))
        hyp.add("B^2A = BAB", alg(b2, a), alg(b, a, b))
        hyp.add("ABB^GD = BB^GD A", alg(a, b_bgd), alg(b_bgd, a))
        hyp.add("BB^GD A^GD = A^GD BB^GD", alg(b_bgd, a_gd), alg(a_gd, b_bgd))
    elif variant is GDOrderVariant.COMMUTING:
        hyp.add("AB = BA", alg(a, b), alg(b, a))
        hyp.add("BB^GD A^GD = A^GD BB^GD", alg(b_bgd, a_gd), alg(a_gd, b_bgd))
    else:
        hyp.add("AB = BA", alg(a, b), alg(b, a))
        hyp.add("B^GD BA = AB^GD B", alg(b_gd, b, a), alg(a, b_gd, b))

    def conclude() -> ResidualReport:
        candidate = alg(a_gd, b_gd) if variant is GDOrderVariant.FORWARD else alg(b_gd, a_gd)
        return verify_gd(alg(a, b), candidate, m, tol)

    return _outcome(hyp.build(), conclude, f"GD {variant.value} product law", [CANONICAL_GD_NOTE])


def check_additive_law(
    a: Tensor3,
    b: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    kind: InverseKind | str = InverseKind.GD,
) -> LawOutcome:
    """(A+B)^X = A^X + B^X for X in {GD, GDMP, GD-Star} when A and B annihilate each other."""

    _require_law_pair(a, b)
    kind = InverseKind(kind)
    if kind not in (InverseKind.GD, InverseKind.GDMP, InverseKind.GDSTAR):
        raise ValueError(f"additive law is defined for gd, gdmp and gdstar, not {kind.value}")
    alg = _Algebra(m, tol)
    a_gd, b_gd = alg.gd(a), alg.gd(b)
    zero = alg.zero(a)

    hyp = _ReportBuilder(tol.residual_tol)
    hyp.add("AB = 0", alg(a, b), zero)
    hyp.add("BA = 0", alg(b, a), zero)
    if kind is InverseKind.GDMP:
        hyp.add("A^+ = A", alg.mp(a), a)
        hyp.add("B^+ = B", alg.mp(b), b)
    if kind is InverseKind.GDSTAR:
        hyp.add("BA^* = 0", alg(b, alg.star(a)), zero)
    hyp.add("A^GD B = 0", alg(a_gd, b), zero)
    hyp.add("BA^GD = 0", alg(b, a_gd), zero)
    hyp.add("B^GD A = 0", alg(b_gd, a), zero)
    hyp.add("AB^GD = 0", alg(a, b_gd), zero)

    def conclude() -> ResidualReport:
        total = a + b
        gd_sum = a_gd + b_gd
        report = _ReportBuilder(tol.residual_tol)
        report.extend(verify_gd(total, gd_sum, m, tol), prefix="GD: " if kind is not InverseKind.GD else "")
        if kind is InverseKind.GDMP:
            report.extend(verify_gdmp(total, alg.gdmp(a) + alg.gdmp(b), m, tol, gd=gd_sum), prefix="GDMP: ")
        elif kind is InverseKind.GDSTAR:
            report.extend(verify_gdstar(total, alg.gdstar(a) + alg.gdstar(b), m, tol, gd=gd_sum), prefix="GD-Star: ")
        return report.build()

    return _outcome(hyp.build(), conclude, f"{kind.value} additive law", [CANONICAL_GD_NOTE])


def check_gdmp_product_laws(
    a: Tensor3,
    b: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    direction: ProductDirection | str = ProductDirection.REVERSE,
) -> LawOutcome:
    _require_law_pair(a, b)
    direction = ProductDirection(direction)
    alg = _Algebra(m, tol)
    a_gd, b_gd = alg.gd(a), alg.gd(b)

    hyp = _ReportBuilder(tol.residual_tol)
    hyp.add("A^+ = A", alg.mp(a), a)
    hyp.add("B^+ = B", alg.mp(b), b)
    hyp.add("AB = BA", alg(a, b), alg(b, a))
    if direction is ProductDirection.REVERSE:
        a_gd_a = alg(a_gd, a)
        b_bgd = alg(b, b_gd)
        hyp.add("A^GD AB = BA^GD A", alg(a_gd_a, b), alg(b, a_gd_a))
        hyp.add("BB^GD A^GD = A^GD BB^GD", alg(b_bgd, a_gd), alg(a_gd, b_bgd))
        product_gd = alg(b_gd, a_gd)
    else:
        hyp.add("B^GD BA = AB^GD B", alg(b_gd, b, a), alg(a, b_gd, b))
        product_gd = alg(a_gd, b_gd)

    def conclude() -> ResidualReport:
        ab = alg(a, b)
        if direction is ProductDirection.REVERSE:
            candidate = alg(alg.gdmp(b), alg.gdmp(a))
        else:
            candidate = alg(alg.gdmp(a), alg.gdmp(b))
        report = _ReportBuilder(tol.residual_tol)
        report.extend(verify_gd(ab, product_gd, m, tol), prefix="GD: ")
        report.extend(verify_gdmp(ab, candidate, m, tol, gd=product_gd), prefix="GDMP: ")
        return report.build()

    return _outcome(hyp.build(), conclude, f"GDMP {direction.value} product law", [CANONICAL_GD_NOTE])


def check_gdstar_product_laws(
    a: Tensor3,
    b: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    direction: ProductDirection | str = ProductDirection.REVERSE,
) -> LawOutcome:
    _require_law_pair(a, b)
    direction = ProductDirection(direction)
    alg = _Algebra(m, tol)
    a_gd, b_gd = alg.gd(a), alg.gd(b)

    hyp = _ReportBuilder(tol.residual_tol)
    hyp.add("AB = BA", alg(a, b), alg(b, a))
    if direction is ProductDirection.REVERSE:
        b_bstar = alg(b, alg.star(b))
        hyp.add("BB^GD A^GD = A^GD", alg(b, b_gd, a_gd), a_gd)
        hyp.add("A^GD ABB^* = BB^* A^GD A", alg(a_gd, a, b_bstar), alg(b_bstar, a_gd, a))
        product_gd = alg(b_gd, a_gd)
    else:
        a_astar = alg(a, alg.star(a))
        hyp.add("AA^GD B^GD = B^GD", alg(a, a_gd, b_gd), b_gd)
        hyp.add("B^GD BAA^* = AA^* B^GD B", alg(b_gd, b, a_astar), alg(a_astar, b_gd, b))
        product_gd = alg(a_gd, b_gd)

    def conclude() -> ResidualReport:
        ab = alg(a, b)
        if direction is ProductDirection.REVERSE:
            candidate = alg(alg.gdstar(b), alg.gdstar(a))
        else:
            candidate = alg(alg.gdstar(a), alg.gdstar(b))
        report = _ReportBuilder(tol.residual_tol)
        report.extend(verify_gd(ab, product_gd, m, tol), prefix="GD: ")
        report.extend(verify_gdstar(ab, candidate, m, tol, gd=product_gd), prefix="GD-Star: ")
        return report.build()

    return _outcome(hyp.build(), conclude, f"GD-Star {direction.value} product law", [CANONICAL_GD_NOTE])


def verify_kind(
    kind: InverseKind | str,
    a: Tensor3,
    x: Tensor3,
    m: TransformMatrix,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
    *,
    k: Optional[int] = None,
) -> ResidualReport:
    """Verify ``x`` against the defining equations of ``kind``."""

    kind = InverseKind(kind)
    if kind is InverseKind.GD:
        return verify_gd(a, x, m, tol, k=k)
    if kind is InverseKind.GDMP:
        return verify_gdmp(a, x, m, tol, k=k)
    if kind is InverseKind.GDSTAR:
        return verify_gdstar(a, x, m, tol, k=k)
    if kind is InverseKind.DRAZIN:
        return verify_drazin(a, x, m, tol, k=k)
    if kind is InverseKind.MP:
        return verify_mp(a, x, m, tol)
    return verify_inverse(a, x, m, tol)

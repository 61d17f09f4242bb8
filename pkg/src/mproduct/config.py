"""Tolerance configuration shared by every numerical routine."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Optional, Tuple


@dataclass(frozen=True)
class ToleranceConfig:
    """Holds the numerical thresholds used for rank decisions and residual checks."""

    rank_tol_factor: float = 1e-12
    residual_tol: float = 1e-8
    golden_tol: float = 5e-3

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise ValueError(f"{field.name} must be strictly positive, got {value!r}")

    def rank_threshold(self, shape: Tuple[int, ...], sigma_max: float) -> float:
        """Singular values at or below this count as zero."""

        return self.rank_tol_factor * max(shape) * sigma_max

    def with_overrides(
        self,
        *,
        rank_tol_factor: Optional[float] = None,
        residual_tol: Optional[float] = None,
        golden_tol: Optional[float] = None,
    ) -> "ToleranceConfig":
        changes = {
            name: value
            for name, value in (
                ("rank_tol_factor", rank_tol_factor),
                ("residual_tol", residual_tol),
                ("golden_tol", golden_tol),
            )
            if value is not None
        }
        return replace(self, **changes)


DEFAULT_TOLERANCES = ToleranceConfig()

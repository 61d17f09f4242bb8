"""Exception types raised by the tensor algebra."""

from __future__ import annotations


class MProductError(Exception):
    """Base class for every error raised by the package."""


class DimensionMismatchError(MProductError, ValueError):
    """Operands are not conformal."""


class SingularTransformError(MProductError, ValueError):
    """The transform matrix M is numerically singular."""


class SingularSliceError(MProductError, ValueError):
    """A transformed slice that has to be inverted is singular."""

    def __init__(self, slice_index: int, message: str | None = None) -> None:
        self.slice_index = slice_index
        super().__init__(message or f"transformed slice {slice_index} is singular")


class ContractViolationError(MProductError, ValueError):
    """Input values break a numerical precondition (e.g. a block that should be nilpotent is not)."""


class NumericalFailureError(MProductError, RuntimeError):
    """A computed result misses its residual tolerance."""


class FormatError(MProductError, ValueError):
    """A tensor or matrix file does not match its JSON schema."""

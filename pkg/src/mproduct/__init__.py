"""Generalized inverses of third-order tensors under the M-product."""

from .config import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import (
    ContractViolationError,
    DimensionMismatchError,
    FormatError,
    MProductError,
    NumericalFailureError,
    SingularSliceError,
    SingularTransformError,
)
from .ginv import (
    InverseKind,
    TensorCoreNilpotent,
    compute_inverse,
    drazin_inverse,
    gd_inverse,
    gdmp_inverse,
    gdstar_inverse,
    mp_inverse,
    tensor_core_nilpotent,
    tensor_index,
    tensor_inverse,
)
from .laws import (
    LawOutcome,
    ResidualReport,
    characterize_gd,
    check_additive_law,
    check_gd_reverse_order,
    check_gdmp_product_laws,
    check_gdstar_product_laws,
    verify_gd,
    verify_gdmp,
    verify_gdstar,
)
from .solver import SolveRequest, SolveResult, solution_family_check, solve
from .tensor import (
    Tensor3,
    TransformedTensor,
    TransformMatrix,
    conj_transpose,
    identity_tensor,
    m_product,
    tensor_power,
    transform,
    inverse_transform,
)

__all__ = [
    "DEFAULT_TOLERANCES",
    "ToleranceConfig",
    "ContractViolationError",
    "DimensionMismatchError",
    "FormatError",
    "MProductError",
    "NumericalFailureError",
    "SingularSliceError",
    "SingularTransformError",
    "InverseKind",
    "TensorCoreNilpotent",
    "compute_inverse",
    "drazin_inverse",
    "gd_inverse",
    "gdmp_inverse",
    "gdstar_inverse",
    "mp_inverse",
    "tensor_core_nilpotent",
    "tensor_index",
    "tensor_inverse",
    "LawOutcome",
    "ResidualReport",
    "characterize_gd",
    "check_additive_law",
    "check_gd_reverse_order",
    "check_gdmp_product_laws",
    "check_gdstar_product_laws",
    "verify_gd",
    "verify_gdmp",
    "verify_gdstar",
    "SolveRequest",
    "SolveResult",
    "solution_family_check",
    "solve",
    "Tensor3",
    "TransformedTensor",
    "TransformMatrix",
    "conj_transpose",
    "identity_tensor",
    "m_product",
    "tensor_power",
    "transform",
    "inverse_transform",
]

"""JSON interchange for tensors and matrices, plus the packaged worked-example fixtures.

Complex entries are written as ``[re, im]`` pairs. A tensor file stores its frontal
slices first: ``data[k][i][j]`` is entry (i, j) of slice k.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .errors import FormatError
from .tensor import Tensor3


LOGGER = logging.getLogger(__name__)
DATA_PACKAGE = "mproduct.data"


def _pairs(values: np.ndarray) -> List[Any]:
    return np.stack([values.real, values.imag], axis=-1).tolist()


def _complex_from_pairs(data: Any, shape: tuple, what: str) -> np.ndarray:
    try:
        array = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{what} data is not a nested list of numbers") from exc
    if array.shape != shape + (2,):
        raise FormatError(f"{what} data has shape {array.shape}, expected {shape + (2,)}")
    if not np.all(np.isfinite(array)):
        raise FormatError(f"{what} data contains non-finite values")
    return array[..., 0] + 1j * array[..., 1]


def _positive_ints(values: Any, count: int, what: str) -> tuple:
    if not isinstance(values, list) or len(values) != count:
        raise FormatError(f"{what} must be a list of {count} integers")
    if not all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in values):
        raise FormatError(f"{what} must contain positive integers, got {values}")
    return tuple(values)


@dataclass(frozen=True, eq=False)
class TensorFile:
    """A tensor together with its optional display name."""

    tensor: Tensor3
    name: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "dims": list(self.tensor.dims),
            "data": _pairs(self.tensor.data.transpose(2, 0, 1)),
        }
        if self.name is not None:
            payload["name"] = self.name
        return payload

    @classmethod
    def from_dict(cls, payload: Any) -> "TensorFile":
        if not isinstance(payload, dict):
            raise FormatError("tensor file must hold a JSON object")
        n1, n2, n3 = _positive_ints(payload.get("dims"), 3, "dims")
        values = _complex_from_pairs(payload.get("data"), (n3, n1, n2), "tensor")
        name = payload.get("name")
        if name is not None and not isinstance(name, str):
            raise FormatError("tensor name must be a string")
        return cls(tensor=Tensor3(values.transpose(1, 2, 0)), name=name)


@dataclass(frozen=True, eq=False)
class MatrixFile:
    matrix: np.ndarray

    def to_dict(self) -> Dict[str, Any]:
        rows, cols = self.matrix.shape
        return {"rows": rows, "cols": cols, "data": _pairs(np.asarray(self.matrix, dtype=np.complex128))}

    @classmethod
    def from_dict(cls, payload: Any) -> "MatrixFile":
        if not isinstance(payload, dict):
            raise FormatError("matrix file must hold a JSON object")
        rows, cols = _positive_ints([payload.get("rows"), payload.get("cols")], 2, "rows/cols")
        return cls(matrix=_complex_from_pairs(payload.get("data"), (rows, cols), "matrix"))


def dumps(payload: Dict[str, Any]) -> str:
    """Serialize with shortest round-trip float text, so parsing restores every double exactly."""

    return json.dumps(payload, allow_nan=False)


def _parse(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source} is not valid JSON: {exc}") from exc


def load_tensor_file(path: str | Path) -> TensorFile:
    LOGGER.debug("Reading tensor file %s", path)
    return TensorFile.from_dict(_parse(Path(path).read_text(encoding="utf-8"), str(path)))


def save_tensor_file(path: str | Path, tensor: Tensor3, name: Optional[str] = None) -> None:
    Path(path).write_text(dumps(TensorFile(tensor, name).to_dict()) + "\n", encoding="utf-8")
    LOGGER.debug("Wrote tensor %s to %s", "x".join(map(str, tensor.dims)), path)


def load_matrix_file(path: str | Path) -> MatrixFile:
    LOGGER.debug("Reading matrix file %s", path)
    return MatrixFile.from_dict(_parse(Path(path).read_text(encoding="utf-8"), str(path)))


def save_matrix_file(path: str | Path, matrix: np.ndarray) -> None:
    Path(path).write_text(dumps(MatrixFile(np.asarray(matrix)).to_dict()) + "\n", encoding="utf-8")


def list_examples() -> List[str]:
    """Names of the packaged fixtures."""

    return sorted(
        entry.name[: -len(".json")]
        for entry in resources.files(DATA_PACKAGE).iterdir()
        if entry.name.endswith(".json")
    )


def example_text(name: str) -> str:
    if name not in list_examples():
        raise FormatError(f"unknown example {name!r}; available: {', '.join(list_examples())}")
    return resources.files(DATA_PACKAGE).joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_example_tensor(name: str) -> Tensor3:
    return TensorFile.from_dict(_parse(example_text(name), name)).tensor


def load_example_matrix(name: str) -> np.ndarray:
    return MatrixFile.from_dict(_parse(example_text(name), name)).matrix

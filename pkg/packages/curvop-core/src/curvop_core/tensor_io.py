"""JSON tensor and field files.

Tensor file: {"dimension": n, "riemann": [[i, j, k, l, value], ...]} with
0-based representatives i<j, k<l, (i,j) ≤ (k,l), or {"model": {...}}.
Field file: {"dimension": n, "samples": [{"weight": w, "riemann": [...]}, ...]}
where each sample may carry a "model" object instead of "riemann".
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from .certify import CurvatureField, FieldSample
from .models import CurvopError, DimensionError, TensorFileError, ValidationError
from .tensors import VALIDATION_TOL, CurvatureTensor
from .zoo import ModelSpec, build_model

logger = logging.getLogger(__name__)


def _read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise TensorFileError(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise TensorFileError(f"{path}: invalid JSON ({exc})") from None


def _parse_dimension(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TensorFileError(f"{where}: 'dimension' must be an integer, got {value!r}")
    if value < 2:
        raise TensorFileError(f"{where}: 'dimension' must be >= 2, got {value}")
    return value


def _check_entries(entries: Any, where: str) -> list[list[Any]]:
    if not isinstance(entries, list):
        raise TensorFileError(f"{where}: 'riemann' must be a list of [i, j, k, l, value] entries")
    for pos, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != 5:
            raise TensorFileError(f"{where}: entry #{pos} must be [i, j, k, l, value], got {entry!r}")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in entry[:4]):
            raise TensorFileError(f"{where}: entry #{pos} {entry!r}: indices must be integers")
        if isinstance(entry[4], bool) or not isinstance(entry[4], int | float):
            raise TensorFileError(f"{where}: entry #{pos} {entry!r}: value must be a number")
    return entries


def tensor_from_dict(
    data: Any,
    *,
    where: str = "tensor",
    dimension: int | None = None,
    tol: float = VALIDATION_TOL,
    check_bianchi: bool = True,
) -> CurvatureTensor:
    """Build a tensor from a parsed tensor object (or field sample)."""
    if not isinstance(data, dict):
        raise TensorFileError(f"{where}: expected a JSON object")
    try:
        if "model" in data:
            if not isinstance(data["model"], dict):
                raise TensorFileError(f"{where}: 'model' must be an object")
            tensor = build_model(ModelSpec.from_dict(data["model"]), check_bianchi=check_bianchi)
            if check_bianchi:
                tensor.validate(tol=tol)
        else:
            if "riemann" not in data:
                raise TensorFileError(f"{where}: needs 'riemann' or 'model'")
            n = _parse_dimension(data.get("dimension", dimension), where)
            entries = _check_entries(data["riemann"], where)
            tensor = CurvatureTensor.from_components(n, entries, tol=tol, check_bianchi=check_bianchi)
    except TensorFileError:
        raise
    except ValidationError as exc:
        raise TensorFileError(f"{where}: {exc}") from None
    if dimension is not None and tensor.dim != dimension:
        raise DimensionError(f"{where}: dimension {tensor.dim} does not match {dimension}")
    return tensor


def load_tensor(path: str | Path, *, tol: float = VALIDATION_TOL, check_bianchi: bool = True) -> CurvatureTensor:
    data = _read_json(path)
    if isinstance(data, dict) and "samples" in data:
        raise TensorFileError(f"{path}: this is a field file; expected a single tensor")
    tensor = tensor_from_dict(data, where=str(path), tol=tol, check_bianchi=check_bianchi)
    logger.debug("Loaded %d-dimensional tensor from %s", tensor.dim, path)
    return tensor


def field_from_dict(
    data: Any,
    *,
    where: str = "field",
    tol: float = VALIDATION_TOL,
    check_bianchi: bool = True,
) -> CurvatureField:
    if not isinstance(data, dict) or not isinstance(data.get("samples"), list):
        raise TensorFileError(f"{where}: expected an object with a 'samples' list")
    dimension = data.get("dimension")
    if dimension is not None:
        dimension = _parse_dimension(dimension, where)
    samples = []
    for idx, raw in enumerate(data["samples"]):
        label = f"{where}: sample #{idx}"
        if not isinstance(raw, dict):
            raise TensorFileError(f"{label}: expected an object")
        weight = raw.get("weight")
        if isinstance(weight, bool) or not isinstance(weight, int | float) or not weight > 0:
            raise TensorFileError(f"{label}: 'weight' must be a positive number, got {weight!r}")
        tensor = tensor_from_dict(raw, where=label, dimension=dimension, tol=tol, check_bianchi=check_bianchi)
        samples.append(FieldSample(float(weight), tensor))
    try:
        return CurvatureField(tuple(samples))
    except CurvopError as exc:
        if isinstance(exc, ValidationError):
            raise TensorFileError(f"{where}: {exc}") from None
        raise


def load_field(path: str | Path, *, tol: float = VALIDATION_TOL, check_bianchi: bool = True) -> CurvatureField:
    """Load a field file; a single-tensor file becomes a one-sample field of volume 1."""
    data = _read_json(path)
    if isinstance(data, dict) and "samples" not in data:
        tensor = tensor_from_dict(data, where=str(path), tol=tol, check_bianchi=check_bianchi)
        return CurvatureField.constant(tensor)
    field = field_from_dict(data, where=str(path), tol=tol, check_bianchi=check_bianchi)
    logger.debug("Loaded field with %d samples from %s", len(field.samples), path)
    return field


def is_field_file(path: str | Path) -> bool:
    data = _read_json(path)
    return isinstance(data, dict) and "samples" in data


def tensor_to_dict(tensor: CurvatureTensor) -> dict[str, Any]:
    return {
        "dimension": tensor.dim,
        "riemann": [[i, j, k, l, v] for i, j, k, l, v in tensor.representatives()],  # noqa: E741
    }


def field_to_dict(field: CurvatureField) -> dict[str, Any]:
    return {
        "dimension": field.dim,
        "samples": [{"weight": s.weight, "riemann": tensor_to_dict(s.tensor)["riemann"]} for s in field.samples],
    }

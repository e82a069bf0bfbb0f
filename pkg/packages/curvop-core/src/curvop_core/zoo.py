"""Closed-form curvature tensors used as ground truth."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from ._compat import StrEnum
from typing import Any

import numpy as np

from .data_loader import load_model_table
from .decompose import weyl, weyl_trace_residual
from .models import DimensionError, UsageError, ValidationError
from .tensors import (
    CurvatureTensor,
    SymTwoTensor,
    bianchi_cyclic_sum,
    enforce_symmetries,
    full_norm_sq,
    kulkarni_nomizu,
    metric,
)

logger = logging.getLogger(__name__)

WEYL_TRACE_TOL = 1e-12
_MAX_PROJECTIONS = 8


class ModelKind(StrEnum):
    SPACE_FORM = "space_form"
    PRODUCT = "product"
    RANDOM = "random"
    RAW = "raw"


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"Model {what} must be an integer, got {value!r}")
    return value


def _component(entry: Any) -> tuple[int, int, int, int, float]:
    if not isinstance(entry, list | tuple) or len(entry) != 5:
        raise ValidationError(f"Model entry must be [i, j, k, l, value], got {entry!r}")
    i, j, p, q = (_as_int(x, "index") for x in entry[:4])
    if isinstance(entry[4], bool) or not isinstance(entry[4], int | float):
        raise ValidationError(f"Model entry {list(entry)!r}: value must be a number")
    return i, j, p, q, float(entry[4])


@dataclass(slots=True, frozen=True)
class ModelSpec:
    """Recipe for a generated curvature tensor."""

    kind: ModelKind
    dim: int | None = None
    curvature: float = 0.0
    factors: tuple[tuple[int, float], ...] = ()
    seed: int = 0
    weyl_scale: float = 1.0
    ricci_scale: float = 1.0
    scalar: float = 0.0
    components: tuple[tuple[int, int, int, int, float], ...] = ()

    @property
    def total_dim(self) -> int:
        if self.kind is ModelKind.PRODUCT:
            return sum(d for d, _ in self.factors)
        if self.dim is None:
            raise ValidationError(f"Model of kind {self.kind.value} needs a dimension")
        return self.dim

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ModelSpec:
        """Parse the `model` object of a tensor file."""
        if "name" in data:
            try:
                return named_spec(str(data["name"]))
            except UsageError as exc:
                raise ValidationError(str(exc)) from None
        try:
            kind = ModelKind(data["kind"])
        except KeyError:
            raise ValidationError("Model object needs a 'kind' or a 'name'") from None
        except ValueError:
            raise ValidationError(f"Unknown model kind: {data['kind']!r}") from None

        dim = data.get("dimension", data.get("dim"))
        try:
            return cls(
                kind=kind,
                dim=_as_int(dim, "dimension") if dim is not None else None,
                curvature=float(data.get("curvature", 0.0)),
                factors=tuple((_as_int(d, "factor dimension"), float(c)) for d, c in data.get("factors", [])),
                seed=_as_int(data.get("seed", 0), "seed"),
                weyl_scale=float(data.get("weyl_scale", 1.0)),
                ricci_scale=float(data.get("ricci_scale", 1.0)),
                scalar=float(data.get("scalar", 0.0)),
                components=tuple(_component(e) for e in data.get("riemann", [])),
            )
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"Malformed model object: {exc}") from None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value}
        if self.kind is ModelKind.SPACE_FORM:
            out.update(dimension=self.dim, curvature=self.curvature)
        elif self.kind is ModelKind.PRODUCT:
            out["factors"] = [[d, c] for d, c in self.factors]
        elif self.kind is ModelKind.RANDOM:
            out.update(
                dimension=self.dim,
                seed=self.seed,
                weyl_scale=self.weyl_scale,
                ricci_scale=self.ricci_scale,
                scalar=self.scalar,
            )
        else:
            out.update(dimension=self.dim, riemann=[list(c) for c in self.components])
        return out


def space_form(n: int, c: float) -> CurvatureTensor:
    """Rm = (c/2)·g⊙g, constant sectional curvature c."""
    if n < 2:
        raise DimensionError(f"Space forms need n >= 2, got {n}")
    g = metric(n)
    return (0.5 * c) * kulkarni_nomizu(g, g)


def product(factors: Sequence[tuple[int, float]]) -> CurvatureTensor:
    """Direct sum of space-form blocks; mixed components vanish.

    One-dimensional factors are flat lines or circles and carry no curvature.
    """
    if not factors:
        raise DimensionError("Product needs at least one factor")
    dims = [int(d) for d, _ in factors]
    if any(d < 1 for d in dims):
        raise DimensionError(f"Factor dimensions must be >= 1, got {dims}")
    n = sum(dims)
    if n < 3:
        raise DimensionError(f"Product needs total dimension >= 3, got {n}")

    entries = np.zeros((n, n, n, n))
    offset = 0
    for d, c in factors:
        d = int(d)
        if d >= 2:
            block = slice(offset, offset + d)
            entries[block, block, block, block] = space_form(d, float(c)).entries
        elif c:
            logger.debug("Ignoring curvature %g of a one-dimensional factor", c)
        offset += d
    return CurvatureTensor(entries)


def _unit_traceless(rng: np.random.Generator, n: int) -> SymTwoTensor:
    raw = rng.standard_normal((n, n))
    sym = 0.5 * (raw + raw.T)
    sym -= (np.trace(sym) / n) * np.eye(n)
    return SymTwoTensor(sym / np.linalg.norm(sym))


def _unit_weyl(rng: np.random.Generator, n: int) -> CurvatureTensor:
    raw = enforce_symmetries(rng.standard_normal((n, n, n, n)))
    w = CurvatureTensor(enforce_symmetries(raw - bianchi_cyclic_sum(raw) / 3.0))
    for _ in range(_MAX_PROJECTIONS):
        w = weyl(w)
        if weyl_trace_residual(w) < WEYL_TRACE_TOL:
            break
    norm = full_norm_sq(w) ** 0.5
    return (1.0 / norm) * w


def random_curvature(
    n: int,
    seed: int,
    weyl_scale: float = 1.0,
    ricci_scale: float = 1.0,
    scalar: float = 0.0,
) -> CurvatureTensor:
    """(R/(2n(n−1)))g⊙g + (1/(n−2))S̊⊙g + w.

    S̊ is a random trace-free symmetric tensor of norm `ricci_scale`, so it is
    exactly the trace-free Ricci part; w is a random Weyl tensor with
    |w| = |weyl_scale|.
    """
    if n < 3:
        raise DimensionError(f"Random curvature needs n >= 3, got {n}")
    if n == 3 and weyl_scale != 0:
        raise DimensionError("The Weyl part vanishes identically in dimension 3; use weyl_scale=0")
    rng = np.random.default_rng(seed)
    g = metric(n)
    rm = (scalar / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g)
    ric0 = _unit_traceless(rng, n)
    if ricci_scale:
        rm = rm + (ricci_scale / (n - 2)) * kulkarni_nomizu(ric0, g)
    if weyl_scale:
        rm = rm + weyl_scale * _unit_weyl(rng, n)
    return rm


def build_model(spec: ModelSpec, *, check_bianchi: bool = True) -> CurvatureTensor:
    if spec.kind is ModelKind.SPACE_FORM:
        return space_form(spec.total_dim, spec.curvature)
    if spec.kind is ModelKind.PRODUCT:
        return product(spec.factors)
    if spec.kind is ModelKind.RANDOM:
        return random_curvature(spec.total_dim, spec.seed, spec.weyl_scale, spec.ricci_scale, spec.scalar)
    return CurvatureTensor.from_components(spec.total_dim, spec.components, check_bianchi=check_bianchi)


def named_spec(name: str) -> ModelSpec:
    """Spec of a row of the known-value table."""
    record = load_model_table().get(name)
    if record is None:
        known = ", ".join(load_model_table().order)
        raise UsageError(f"Unknown model {name!r}; known models: {known}")
    if record.kind == ModelKind.PRODUCT:
        return ModelSpec(kind=ModelKind.PRODUCT, factors=record.factors)
    return ModelSpec(kind=ModelKind.SPACE_FORM, dim=record.dim, curvature=record.curvature or 0.0)


def named_model(name: str) -> CurvatureTensor:
    return build_model(named_spec(name))

"""Load the known-value model table from packaged TOML."""

from __future__ import annotations

from ._compat import tomllib
from dataclasses import dataclass
from functools import lru_cache
from importlib.resources import files
from typing import Any


@dataclass(frozen=True)
class ModelRecord:
    """One row of the known-value table."""

    name: str
    description: str
    kind: str
    dim: int
    scalar: float
    weyl_norm_sq: float
    ricci: tuple[float, ...]
    spectrum: tuple[float, ...]
    curvature: float | None = None
    factors: tuple[tuple[int, float], ...] = ()


@dataclass(frozen=True)
class ModelTable:
    """Normalized model table."""

    order: list[str]
    models: dict[str, ModelRecord]

    def get(self, name: str) -> ModelRecord | None:
        return self.models.get(name)


def _load_raw(resource: str) -> dict[str, Any]:
    data_path = files("curvop_core.data").joinpath(resource)
    with data_path.open("rb") as handle:
        return tomllib.load(handle)


@lru_cache(maxsize=1)
def load_model_table() -> ModelTable:
    """Load and normalize the packaged model table."""
    raw = _load_raw("models.toml").get("models", {})
    order = list(raw.get("order", []))
    models: dict[str, ModelRecord] = {}

    for name, row in raw.items():
        if name == "order":
            continue
        curvature = row.get("curvature")
        models[name] = ModelRecord(
            name=name,
            description=row.get("description", ""),
            kind=row["kind"],
            dim=int(row["dim"]),
            scalar=float(row["scalar"]),
            weyl_norm_sq=float(row["weyl_norm_sq"]),
            ricci=tuple(float(x) for x in row["ricci"]),
            spectrum=tuple(float(x) for x in row["spectrum"]),
            curvature=float(curvature) if curvature is not None else None,
            factors=tuple((int(d), float(c)) for d, c in row.get("factors", [])),
        )

    return ModelTable(order=order, models=models)

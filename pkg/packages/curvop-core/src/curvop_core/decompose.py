"""Schouten/Weyl and orthogonal decompositions of a curvature tensor."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .models import DimensionError, InternalConsistencyError
from .tensors import (
    CurvatureTensor,
    SymTwoTensor,
    full_norm_sq,
    kulkarni_nomizu,
    metric,
    ricci_contract,
    scalar_curvature,
)

RECONSTRUCTION_TOL = 1e-9
IDENTITY_TOL = 1e-8


def _require_dim(rm: CurvatureTensor) -> int:
    n = rm.dim
    if n < 3:
        raise DimensionError(f"Decomposition needs dim >= 3, got {n}")
    return n


def _scale(rm: CurvatureTensor) -> float:
    return 1.0 + math.sqrt(full_norm_sq(rm))


def schouten(rm: CurvatureTensor) -> SymTwoTensor:
    """S = (1/(n−2))(Ric − R/(2(n−1))·g)."""
    n = _require_dim(rm)
    ric = ricci_contract(rm)
    r = ric.trace()
    return (1.0 / (n - 2)) * (ric - (r / (2.0 * (n - 1))) * metric(n))


def weyl(rm: CurvatureTensor) -> CurvatureTensor:
    """𝒲 = Rm − S⊙g."""
    n = _require_dim(rm)
    return rm - kulkarni_nomizu(schouten(rm), metric(n))


def weyl_trace_residual(w: CurvatureTensor) -> float:
    """max over (i,k) of |Σ_j 𝒲_ijkj|."""
    return float(np.max(np.abs(np.einsum("ijkj->ik", w.entries))))


@dataclass(frozen=True, eq=False)
class DecomposedCurvature:
    """All pieces of Rm = S⊙g + 𝒲 = (R/(2n(n−1)))g⊙g + (1/(n−2))Ric̊⊙g + 𝒲."""

    curvature: CurvatureTensor
    scalar: float
    ricci: SymTwoTensor
    schouten: SymTwoTensor
    traceless_ricci: SymTwoTensor
    weyl: CurvatureTensor
    concircular: CurvatureTensor

    @property
    def dim(self) -> int:
        return self.curvature.dim

    @property
    def weyl_norm(self) -> float:
        return math.sqrt(full_norm_sq(self.weyl))

    @property
    def traceless_ricci_norm(self) -> float:
        return math.sqrt(full_norm_sq(self.traceless_ricci))

    def schouten_reconstruction(self) -> CurvatureTensor:
        return kulkarni_nomizu(self.schouten, metric(self.dim)) + self.weyl

    def orthogonal_reconstruction(self) -> CurvatureTensor:
        n = self.dim
        g = metric(n)
        constant = (self.scalar / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g)
        return constant + (1.0 / (n - 2)) * kulkarni_nomizu(self.traceless_ricci, g) + self.weyl

    def residuals(self) -> dict[str, float]:
        rm = self.curvature.entries
        return {
            "schouten_reconstruction": float(np.max(np.abs(self.schouten_reconstruction().entries - rm))),
            "orthogonal_reconstruction": float(np.max(np.abs(self.orthogonal_reconstruction().entries - rm))),
            "weyl_trace": weyl_trace_residual(self.weyl),
            "traceless_ricci_trace": abs(self.traceless_ricci.trace()),
        }


def orthogonal_decompose(rm: CurvatureTensor, *, tol: float = RECONSTRUCTION_TOL) -> DecomposedCurvature:
    """Decompose Rm and verify every reconstruction identity within tol·(1+|Rm|)."""
    n = _require_dim(rm)
    g = metric(n)
    ric = ricci_contract(rm)
    r = scalar_curvature(rm)
    s = schouten(rm)
    ric0 = ric - (r / n) * g
    w = rm - kulkarni_nomizu(s, g)
    z = (1.0 / (n - 2)) * kulkarni_nomizu(ric0, g) + w
    decomposed = DecomposedCurvature(
        curvature=rm,
        scalar=r,
        ricci=ric,
        schouten=s,
        traceless_ricci=ric0,
        weyl=w,
        concircular=z,
    )
    limit = tol * _scale(rm)
    for name, value in decomposed.residuals().items():
        if value > limit:
            raise InternalConsistencyError(f"Decomposition residual {name} = {value:.3e} exceeds {limit:.3e}")
    return decomposed


def concircular_norm_sq(d: DecomposedCurvature, *, rel_tol: float = IDENTITY_TOL) -> float:
    """|Z|², checked against (4/(n−2))|Ric̊|² + |𝒲|²."""
    n = d.dim
    direct = full_norm_sq(d.concircular)
    split = (4.0 / (n - 2)) * full_norm_sq(d.traceless_ricci) + full_norm_sq(d.weyl)
    if abs(direct - split) > rel_tol * (1.0 + abs(split)):
        raise InternalConsistencyError(f"|Z|² = {direct!r} disagrees with orthogonal split {split!r}")
    return direct


def pinching_quantity(d: DecomposedCurvature) -> float:
    """√(1/(n−2))|Ric̊| + |𝒲|."""
    n = d.dim
    return math.sqrt(1.0 / (n - 2)) * d.traceless_ricci_norm + d.weyl_norm

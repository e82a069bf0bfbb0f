"""kth-intermediate Ricci curvature.

For a unit direction u the infimum over orthonormal k-frames of u^⊥ of
Σ Rm(u, e_i, u, e_i) is the sum of the k smallest eigenvalues of the
directional operator v ↦ Rm(u, v, u, ·) on u^⊥. The outer minimum over u is
found by seeded multi-start descent on the sphere; it is not certified.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from .models import DimensionError, PreconditionError, RangeError
from .tensors import CurvatureTensor

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 64
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 200
DEFAULT_INITIAL_STEP = 0.1
DEFAULT_FD_STEP = 1e-5
UNIT_TOL = 1e-10

_GRID_CHUNK = 8192
# Irrational steps of the super-Fibonacci spiral on S³.
_SF_PHI = math.sqrt(2.0)
_SF_PSI = 1.533751168755204288118041


@dataclass(slots=True, frozen=True)
class RicKResult:
    """Best Ric_k value found and where."""

    k: int
    value: float
    argmin_direction: np.ndarray
    restarts_used: int
    converged: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "value": self.value,
            "argmin_direction": [float(x) for x in self.argmin_direction],
            "restarts_used": self.restarts_used,
            "converged": self.converged,
        }


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise RangeError(f"k must lie in [1, {n - 1}] for n={n}, got {k}")


def _canonical_sign(u: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(np.abs(u) > 1e-12)
    if nonzero.size and u[nonzero[0]] < 0:
        return -u
    return u


def orthonormal_complement(u: np.ndarray) -> np.ndarray:
    """Rows form an orthonormal basis of u^⊥.

    Gram–Schmidt from u against the standard basis with the axis most
    aligned with u dropped.
    """
    n = u.size
    drop = int(np.argmax(np.abs(u)))
    basis = [u]
    for axis in range(n):
        if axis == drop:
            continue
        v = np.zeros(n)
        v[axis] = 1.0
        for w in basis:
            v = v - float(v @ w) * w
        basis.append(v / np.linalg.norm(v))
    return np.array(basis[1:])


def _as_unit(rm: CurvatureTensor, u: np.ndarray | list[float]) -> np.ndarray:
    vec = np.asarray(u, dtype=float)
    if vec.shape != (rm.dim,):
        raise DimensionError(f"Direction must have shape ({rm.dim},), got {vec.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > UNIT_TOL:
        raise PreconditionError(f"Direction must be a unit vector, |u| = {norm!r}")
    return vec


def directional_operator(rm: CurvatureTensor, u: np.ndarray | list[float]) -> np.ndarray:
    """Matrix ⟨b_a, R_u b_b⟩ = Rm(u, b_a, u, b_b) on an orthonormal basis of u^⊥."""
    vec = _as_unit(rm, u)
    r_u = np.einsum("i,ijkl,k->jl", vec, rm.entries, vec)
    basis = orthonormal_complement(vec)
    m = basis @ r_u @ basis.T
    return 0.5 * (m + m.T)


def ric_k_at(rm: CurvatureTensor, u: np.ndarray | list[float], k: int) -> float:
    """Sum of the k smallest eigenvalues of the directional operator."""
    _check_k(rm.dim, k)
    values = np.linalg.eigvalsh(directional_operator(rm, u))
    return float(np.sum(values[:k]))


def _ric_k_batch(entries: np.ndarray, directions: np.ndarray, k: int) -> np.ndarray:
    """Ric_k at many (not necessarily unit) directions at once.

    R_u annihilates u, so lifting u to an eigenvalue above the spectral
    radius leaves the k smallest eigenvalues equal to those on u^⊥.
    """
    u = directions / np.linalg.norm(directions, axis=1, keepdims=True)
    r_u = np.einsum("pi,ijkl,pk->pjl", u, entries, u, optimize=True)
    r_u = 0.5 * (r_u + r_u.transpose(0, 2, 1))
    lift = 2.0 * np.linalg.norm(r_u, axis=(1, 2)) + 1.0
    lifted = r_u + lift[:, None, None] * np.einsum("pj,pl->pjl", u, u)
    values = np.linalg.eigvalsh(lifted)
    return np.sum(values[:, :k], axis=1)


def _descend(
    entries: np.ndarray,
    start: np.ndarray,
    k: int,
    *,
    tol: float,
    max_iter: int,
    initial_step: float,
    fd_step: float,
) -> tuple[float, np.ndarray]:
    """Projected finite-difference descent on the unit sphere with step halving."""
    n = start.size
    u = start / np.linalg.norm(start)
    value = float(_ric_k_batch(entries, u[None, :], k)[0])
    step = initial_step
    offsets = fd_step * np.eye(n)
    for _ in range(max_iter):
        if step < tol:
            break
        probes = np.concatenate([u + offsets, u - offsets])
        f = _ric_k_batch(entries, probes, k)
        grad = (f[:n] - f[n:]) / (2.0 * fd_step)
        grad = grad - float(grad @ u) * u
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm < 1e-14:
            break
        candidate = u - step * grad / grad_norm
        candidate = candidate / np.linalg.norm(candidate)
        candidate_value = float(_ric_k_batch(entries, candidate[None, :], k)[0])
        if candidate_value < value:
            u, value = candidate, candidate_value
        else:
            step *= 0.5
    return value, _canonical_sign(u)


def ric_k_min(
    rm: CurvatureTensor,
    k: int,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    *,
    max_iter: int = DEFAULT_MAX_ITER,
    initial_step: float = DEFAULT_INITIAL_STEP,
    fd_step: float = DEFAULT_FD_STEP,
    threads: int = 1,
) -> RicKResult:
    """Multi-start minimization of Ric_k over unit directions.

    The result is independent of `threads`: restarts are collected in order
    and the best one is chosen by (value, direction).
    """
    n = rm.dim
    _check_k(n, k)
    if restarts < 1:
        raise RangeError(f"restarts must be >= 1, got {restarts}")
    rng = np.random.default_rng(seed)
    starts = rng.standard_normal((restarts, n))
    entries = rm.entries

    def _run(start: np.ndarray) -> tuple[float, np.ndarray]:
        return _descend(
            entries,
            start,
            k,
            tol=tol,
            max_iter=max_iter,
            initial_step=initial_step,
            fd_step=fd_step,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_run, starts))
    else:
        results = [_run(start) for start in starts]

    best_value, best_dir = min(results, key=lambda item: (item[0], tuple(item[1])))
    near = [direction for value, direction in results if value <= best_value + 10.0 * tol]
    converged = len(near) * 2 >= restarts or any(abs(float(d @ best_dir)) < 1.0 - 1e-6 for d in near)
    if not converged:
        logger.warning(
            "Ric_%d search did not settle: best %.6g reached by %d/%d restarts", k, best_value, len(near), restarts
        )
    logger.debug("Ric_%d min %.12g over %d restarts (seed %d)", k, best_value, restarts, seed)
    return RicKResult(
        k=k,
        value=float(best_value),
        argmin_direction=best_dir,
        restarts_used=restarts,
        converged=converged,
    )


def sectional_bounds(
    rm: CurvatureTensor,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    *,
    threads: int = 1,
) -> tuple[RicKResult, RicKResult]:
    """(min, max) sectional curvature searches; the max is reported as Ric_1 of −Rm negated."""
    low = ric_k_min(rm, 1, restarts, seed, tol, threads=threads)
    flipped = ric_k_min(-rm, 1, restarts, seed, tol, threads=threads)
    high = RicKResult(
        k=1,
        value=-flipped.value,
        argmin_direction=flipped.argmin_direction,
        restarts_used=flipped.restarts_used,
        converged=flipped.converged,
    )
    return low, high


def sphere_lattice(n: int, count: int, seed: int = 0) -> np.ndarray:
    """Near-uniform unit vectors in Rⁿ.

    Circle points for n=2, the spherical Fibonacci lattice for n=3, the
    super-Fibonacci spiral for n=4 and seeded Gaussian samples beyond.
    """
    if n < 2 or count < 1:
        raise RangeError(f"Need n >= 2 and count >= 1, got n={n}, count={count}")
    s = np.arange(count, dtype=float) + 0.5
    if n == 2:
        theta = 2.0 * math.pi * s / count
        return np.column_stack([np.cos(theta), np.sin(theta)])
    if n == 3:
        z = 1.0 - 2.0 * s / count
        r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        golden = (1.0 + math.sqrt(5.0)) / 2.0
        phi = 2.0 * math.pi * np.arange(count) / golden
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    if n == 4:
        r = np.sqrt(s / count)
        big_r = np.sqrt(1.0 - s / count)
        alpha = 2.0 * math.pi * s / _SF_PHI
        beta = 2.0 * math.pi * s / _SF_PSI
        return np.column_stack([r * np.sin(alpha), r * np.cos(alpha), big_r * np.sin(beta), big_r * np.cos(beta)])
    points = np.random.default_rng(seed).standard_normal((count, n))
    return points / np.linalg.norm(points, axis=1, keepdims=True)


def ric_k_grid_min(rm: CurvatureTensor, k: int, points: np.ndarray) -> tuple[float, np.ndarray]:
    """Brute-force minimum of Ric_k over the given directions."""
    _check_k(rm.dim, k)
    best_value = math.inf
    best_dir = points[0]
    for start in range(0, len(points), _GRID_CHUNK):
        chunk = points[start : start + _GRID_CHUNK]
        values = _ric_k_batch(rm.entries, chunk, k)
        idx = int(np.argmin(values))
        if values[idx] < best_value:
            best_value = float(values[idx])
            best_dir = chunk[idx]
    return best_value, _canonical_sign(best_dir / np.linalg.norm(best_dir))

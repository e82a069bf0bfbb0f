"""Dense symmetric eigensolver (cyclic Jacobi rotations)."""

from __future__ import annotations

import logging
import math

import numpy as np

from .models import DimensionError, NumericalError

logger = logging.getLogger(__name__)

MAX_SWEEPS = 100
REL_TOL = 1e-13


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(float(np.sum(a * a)) - float(np.sum(np.diag(a) ** 2)), 0.0)))


def _normalize_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so that its first component above 1e-12 is positive."""
    out = vectors.copy()
    for col in range(out.shape[1]):
        nonzero = np.flatnonzero(np.abs(out[:, col]) > 1e-12)
        if nonzero.size and out[nonzero[0], col] < 0:
            out[:, col] = -out[:, col]
    return out


def jacobi_eigh(
    matrix: np.ndarray,
    *,
    max_sweeps: int = MAX_SWEEPS,
    rel_tol: float = REL_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix.

    Returns (eigenvalues ascending, eigenvectors as columns). Converged when
    the off-diagonal Frobenius norm drops to rel_tol·‖M‖_F.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    target = rel_tol * float(np.linalg.norm(a))

    sweeps = 0
    while _off_norm(a) > target:
        if sweeps >= max_sweeps:
            raise NumericalError(
                f"Jacobi eigensolver did not converge after {max_sweeps} sweeps (off-norm {_off_norm(a):.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    logger.debug("Jacobi converged in %d sweeps for %dx%d matrix", sweeps, n, n)
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], _normalize_signs(v[:, order])


def jacobi_eigvals(matrix: np.ndarray, *, max_sweeps: int = MAX_SWEEPS, rel_tol: float = REL_TOL) -> np.ndarray:
    """Ascending eigenvalues only."""
    values, _ = jacobi_eigh(matrix, max_sweeps=max_sweeps, rel_tol=rel_tol)
    return values

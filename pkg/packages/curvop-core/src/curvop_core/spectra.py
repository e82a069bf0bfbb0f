"""Curvature operators on Λ² and their spectra."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .decompose import DecomposedCurvature, orthogonal_decompose, schouten
from .linalg import MAX_SWEEPS, REL_TOL, jacobi_eigh
from .models import (
    DimensionError,
    KPositivity,
    NotConformallyFlatError,
    Positivity,
    RangeError,
    ValidationError,
)
from .tensors import CurvatureTensor, Frame, SymTwoTensor, full_norm_sq, kulkarni_nomizu, metric

POSITIVITY_TOL = 1e-10
CONFORMALLY_FLAT_TOL = 1e-9


@dataclass(frozen=True)
class BivectorIndex:
    """Lexicographic basis e_i∧e_j (i<j) of Λ²."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @cached_property
    def _flat(self) -> dict[tuple[int, int], int]:
        return {pair: idx for idx, pair in enumerate(self.pairs)}

    def flat(self, i: int, j: int) -> int:
        """Flat index of e_i∧e_j for i<j."""
        try:
            return self._flat[(i, j)]
        except KeyError:
            raise RangeError(f"({i},{j}) is not an i<j pair for n={self.n}") from None

    def labels(self) -> list[str]:
        return [f"{i}{j}" if self.n <= 10 else f"{i}-{j}" for i, j in self.pairs]


@lru_cache(maxsize=32)
def bivector_index(n: int) -> BivectorIndex:
    if n < 2:
        raise DimensionError(f"Λ² needs dim >= 2, got {n}")
    pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return BivectorIndex(n=n, pairs=pairs)


@dataclass(frozen=True, eq=False)
class BivectorMatrix:
    """Symmetric N×N matrix over the Λ² basis."""

    index: BivectorIndex
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=float)
        size = self.index.size
        if arr.shape != (size, size):
            raise DimensionError(f"Expected {size}x{size} matrix for n={self.index.n}, got {arr.shape}")
        arr = 0.5 * (arr + arr.T)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def size(self) -> int:
        return self.index.size

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def frobenius_sq(self) -> float:
        return float(np.sum(np.square(self.entries)))

    def __add__(self, other: BivectorMatrix) -> BivectorMatrix:
        if other.index.n != self.index.n:
            raise DimensionError(f"Dimension mismatch: {self.index.n} != {other.index.n}")
        return BivectorMatrix(self.index, self.entries + other.entries)


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    """Ascending eigenvalues with their prefix sums."""

    eigenvalues: np.ndarray
    prefix_sums: np.ndarray
    eigenvectors: np.ndarray | None = None

    @classmethod
    def from_eigenvalues(cls, values: np.ndarray, vectors: np.ndarray | None = None) -> SpectralSummary:
        vals = np.array(values, dtype=float)
        if vals.size and np.any(np.diff(vals) < 0):
            raise ValidationError("Eigenvalues must be sorted ascending")
        sums = np.cumsum(vals)
        for arr in (vals, sums):
            arr.setflags(write=False)
        return cls(eigenvalues=vals, prefix_sums=sums, eigenvectors=vectors)

    @property
    def size(self) -> int:
        return int(self.eigenvalues.size)

    def lower_sum(self, k: int) -> float:
        """μ₁ + … + μ_k."""
        self._check_k(k)
        return float(self.prefix_sums[k - 1])

    def upper_sum(self, k: int) -> float:
        """μ_{N−k+1} + … + μ_N."""
        self._check_k(k)
        return float(np.sum(self.eigenvalues[self.size - k :]))

    def _check_k(self, k: int) -> None:
        if not 1 <= k <= self.size:
            raise RangeError(f"k must lie in [1, {self.size}], got {k}")

    def to_dict(self) -> dict[str, list[float]]:
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "prefix_sums": [float(x) for x in self.prefix_sums],
        }


def symmetric_spectrum(
    matrix: np.ndarray,
    *,
    max_sweeps: int = MAX_SWEEPS,
    rel_tol: float = REL_TOL,
) -> SpectralSummary:
    """Spectrum of a plain symmetric array via the Jacobi solver."""
    values, vectors = jacobi_eigh(matrix, max_sweeps=max_sweeps, rel_tol=rel_tol)
    return SpectralSummary.from_eigenvalues(values, vectors)


def spectrum(m: BivectorMatrix, *, max_sweeps: int = MAX_SWEEPS, rel_tol: float = REL_TOL) -> SpectralSummary:
    return symmetric_spectrum(m.entries, max_sweeps=max_sweeps, rel_tol=rel_tol)


def curvature_operator(rm: CurvatureTensor, frame: Frame | None = None) -> BivectorMatrix:
    """Matrix of Rm on Λ²: entry[(i,j),(k,l)] = Rm(f_i, f_j, f_k, f_l).

    Works for any curvature-type tensor (Rm, 𝒲, S⊙g, ...).
    """
    if frame is not None:
        if frame.dim != rm.dim:
            raise DimensionError(f"Frame has dim {frame.dim}, tensor has dim {rm.dim}")
        rm = rm.in_frame(frame)
    index = bivector_index(rm.dim)
    first = np.array([p[0] for p in index.pairs], dtype=int)
    second = np.array([p[1] for p in index.pairs], dtype=int)
    matrix = rm.entries[first[:, None], second[:, None], first[None, :], second[None, :]]
    return BivectorMatrix(index, matrix)


def traceless_ricci_operator(d: DecomposedCurvature, frame: Frame | None = None) -> BivectorMatrix:
    """𝔯ic̊, the operator of (1/(n−2))Ric̊⊙g."""
    n = d.dim
    return curvature_operator((1.0 / (n - 2)) * kulkarni_nomizu(d.traceless_ricci, metric(n)), frame)


def ricci_eigenframe(
    ric: SymTwoTensor,
    *,
    max_sweeps: int = MAX_SWEEPS,
    rel_tol: float = REL_TOL,
) -> tuple[Frame, np.ndarray]:
    """Orthonormal Ricci eigenframe, rows ordered by ascending eigenvalue."""
    values, vectors = jacobi_eigh(ric.entries, max_sweeps=max_sweeps, rel_tol=rel_tol)
    return Frame(vectors.T), values


def pair_eigenvalues(ricci_eigenvalues: np.ndarray, scalar: float) -> np.ndarray:
    """λ_ij = (1/(n−2))(λ_i + λ_j − R/(n−1)) in lexicographic pair order."""
    lam = np.asarray(ricci_eigenvalues, dtype=float)
    n = lam.size
    if n < 3:
        raise DimensionError(f"Schouten eigenvalues need dim >= 3, got {n}")
    index = bivector_index(n)
    return np.array([(lam[i] + lam[j] - scalar / (n - 1)) / (n - 2) for i, j in index.pairs])


@dataclass(frozen=True, eq=False)
class Theorem12Blocks:
    """𝔯 = 𝔖 + 𝔚 in a Ricci eigenframe."""

    schouten_block: BivectorMatrix
    weyl_block: BivectorMatrix
    frame: Frame
    ricci_eigenvalues: np.ndarray
    scalar: float

    @property
    def operator(self) -> BivectorMatrix:
        return self.schouten_block + self.weyl_block


def theorem12_blocks(rm: CurvatureTensor) -> Theorem12Blocks:
    """Block decomposition of the curvature operator in a Ricci eigenframe.

    𝔖 is diagonal with entries λ_ij; off-diagonal entries of 𝔖 + 𝔚 are the
    Weyl components in that frame.
    """
    n = rm.dim
    if n < 3:
        raise DimensionError(f"Block decomposition needs dim >= 3, got {n}")
    d = orthogonal_decompose(rm)
    frame, lam = ricci_eigenframe(d.ricci)
    index = bivector_index(n)
    schouten_block = BivectorMatrix(index, np.diag(pair_eigenvalues(lam, d.scalar)))
    weyl_block = curvature_operator(d.weyl, frame)
    return Theorem12Blocks(
        schouten_block=schouten_block,
        weyl_block=weyl_block,
        frame=frame,
        ricci_eigenvalues=lam,
        scalar=d.scalar,
    )


def schouten_operator(rm: CurvatureTensor, frame: Frame | None = None) -> BivectorMatrix:
    """𝔖 in an arbitrary frame, built from S⊙g."""
    return curvature_operator(kulkarni_nomizu(schouten(rm), metric(rm.dim)), frame)


def k_positivity(s: SpectralSummary, k: int) -> KPositivity:
    """Classify μ₁+⋯+μ_k against ±1e-10."""
    margin = s.lower_sum(k)
    if margin > POSITIVITY_TOL:
        verdict = Positivity.POSITIVE
    elif margin >= -POSITIVITY_TOL:
        verdict = Positivity.NONNEG
    else:
        verdict = Positivity.INDEFINITE
    return KPositivity(k=k, verdict=verdict, margin=margin)


def sectional_range(s: SpectralSummary, weyl_norm_sq: float, curvature_norm_sq: float) -> tuple[float, float]:
    """(μ₁, μ_N) as sectional curvature bounds of a conformally flat tensor."""
    if weyl_norm_sq >= CONFORMALLY_FLAT_TOL * (1.0 + curvature_norm_sq):
        raise NotConformallyFlatError(f"|𝒲|² = {weyl_norm_sq:.3e} is above the conformal flatness tolerance")
    if s.size == 0:
        raise DimensionError("Empty spectrum")
    return float(s.eigenvalues[0]), float(s.eigenvalues[-1])


def is_conformally_flat(d: DecomposedCurvature) -> bool:
    return full_norm_sq(d.weyl) < CONFORMALLY_FLAT_TOL * (1.0 + full_norm_sq(d.curvature))


def quasi_positive_quantity(ricci_eigenvalues: np.ndarray | list[float], scalar: float, n: int) -> float:
    """(λ₁ + 2λ₂ + λ₃) − 2R/(n−2) for ascending Ricci eigenvalues."""
    if n < 3:
        raise DimensionError(f"Quasi-positivity quantity needs dim >= 3, got {n}")
    lam = np.asarray(ricci_eigenvalues, dtype=float)
    if lam.size < 3:
        raise DimensionError(f"Need at least three Ricci eigenvalues, got {lam.size}")
    return float(lam[0] + 2.0 * lam[1] + lam[2] - 2.0 * scalar / (n - 2))

"""Tensor data model in a fixed orthonormal frame.

Components are always taken in an orthonormal frame, so the metric is the
identity matrix and no index is ever raised or lowered.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .models import DimensionError, FrameError, ValidationError

VALIDATION_TOL = 1e-9
FRAME_TOL = 1e-10


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _relative_scale(array: np.ndarray) -> float:
    return 1.0 + (float(np.max(np.abs(array))) if array.size else 0.0)


def enforce_symmetries(array: np.ndarray) -> np.ndarray:
    """Project a rank-4 array onto pair antisymmetry and pair exchange symmetry.

    The result satisfies both symmetries bit-for-bit; inputs that already
    satisfy them exactly are returned unchanged.
    """
    out = 0.5 * (array - array.transpose(1, 0, 2, 3))
    out = 0.5 * (out - out.transpose(0, 1, 3, 2))
    return 0.5 * (out + out.transpose(2, 3, 0, 1))


def bianchi_cyclic_sum(array: np.ndarray) -> np.ndarray:
    """T[i,j,k,l] + T[j,k,i,l] + T[k,i,j,l]."""
    return array + np.einsum("jkil->ijkl", array) + np.einsum("kijl->ijkl", array)


@dataclass(frozen=True, eq=False)
class SymTwoTensor:
    """Symmetric (0,2) tensor; entries are exactly symmetric after construction."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"Expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 2:
            raise DimensionError(f"Symmetric 2-tensors need dim >= 2, got {arr.shape[0]}")
        asym = float(np.max(np.abs(arr - arr.T)))
        if asym > VALIDATION_TOL * _relative_scale(arr):
            raise ValidationError(f"Matrix is not symmetric (max asymmetry {asym:.3e})")
        object.__setattr__(self, "entries", _readonly(0.5 * (arr + arr.T)))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def identity(cls, n: int) -> SymTwoTensor:
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, n: int) -> SymTwoTensor:
        return cls(np.zeros((n, n)))

    @classmethod
    def diagonal(cls, values: np.ndarray | list[float]) -> SymTwoTensor:
        return cls(np.diag(np.asarray(values, dtype=float)))

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def in_frame(self, frame: Frame) -> SymTwoTensor:
        """Components with respect to the rows of `frame`."""
        _check_frame_dim(frame, self.dim)
        f = frame.vectors
        return SymTwoTensor(f @ self.entries @ f.T)

    def __add__(self, other: SymTwoTensor) -> SymTwoTensor:
        _check_same_dim(self.dim, other.dim)
        return SymTwoTensor(self.entries + other.entries)

    def __sub__(self, other: SymTwoTensor) -> SymTwoTensor:
        _check_same_dim(self.dim, other.dim)
        return SymTwoTensor(self.entries - other.entries)

    def __mul__(self, scalar: float) -> SymTwoTensor:
        return SymTwoTensor(float(scalar) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> SymTwoTensor:
        return SymTwoTensor(-self.entries)


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """(0,4) tensor with the algebraic symmetries of a Riemann tensor.

    Pair antisymmetry and pair exchange symmetry are enforced exactly on
    construction. The first Bianchi identity is checked by `from_array` or
    `validate`, since intermediate results only satisfy it to rounding.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise DimensionError(f"Expected an n×n×n×n array, got shape {arr.shape}")
        if arr.shape[0] < 2:
            raise DimensionError(f"Curvature tensors need dim >= 2, got {arr.shape[0]}")
        projected = enforce_symmetries(arr)
        drift = float(np.max(np.abs(projected - arr)))
        if drift > VALIDATION_TOL * _relative_scale(arr):
            raise ValidationError(f"Array violates curvature symmetries (max deviation {drift:.3e})")
        object.__setattr__(self, "entries", _readonly(projected))

    @classmethod
    def from_array(
        cls,
        array: np.ndarray,
        *,
        tol: float = VALIDATION_TOL,
        check_bianchi: bool = True,
    ) -> CurvatureTensor:
        """Build and validate a tensor, including the first Bianchi identity."""
        tensor = cls(array)
        if check_bianchi:
            tensor.validate(tol=tol)
        return tensor

    @classmethod
    def from_components(
        cls,
        dim: int,
        components: Iterable[Sequence[float]],
        *,
        tol: float = VALIDATION_TOL,
        check_bianchi: bool = True,
    ) -> CurvatureTensor:
        """Expand representatives [i, j, k, l, value] with i<j, k<l, (i,j) ≤ (k,l).

        Unlisted representatives are zero.
        """
        if dim < 2:
            raise DimensionError(f"Curvature tensors need dim >= 2, got {dim}")
        arr = np.zeros((dim, dim, dim, dim))
        seen: dict[tuple[int, int, int, int], int] = {}
        for pos, entry in enumerate(components):
            if len(entry) != 5:
                raise ValidationError(f"Entry #{pos} must be [i, j, k, l, value], got {list(entry)!r}")
            raw_idx = entry[:4]
            if any(float(x) != int(x) for x in raw_idx):
                raise ValidationError(f"Entry #{pos} {list(entry)!r}: indices must be integers")
            i, j, k, l = (int(x) for x in raw_idx)  # noqa: E741
            if not all(0 <= x < dim for x in (i, j, k, l)):
                raise ValidationError(f"Entry #{pos} {[i, j, k, l]}: index out of range for dimension {dim}")
            if not (i < j and k < l and (i, j) <= (k, l)):
                raise ValidationError(f"Entry #{pos} {[i, j, k, l]}: not a representative (i<j, k<l, (i,j)<=(k,l))")
            key = (i, j, k, l)
            if key in seen:
                raise ValidationError(f"Entry #{pos} {[i, j, k, l]}: duplicate of entry #{seen[key]}")
            seen[key] = pos
            value = float(entry[4])
            for a, b, c, d in ((i, j, k, l), (k, l, i, j)):
                arr[a, b, c, d] = value
                arr[b, a, c, d] = -value
                arr[a, b, d, c] = -value
                arr[b, a, d, c] = value
        return cls.from_array(arr, tol=tol, check_bianchi=check_bianchi)

    def representatives(self, *, drop_zeros: bool = True) -> list[tuple[int, int, int, int, float]]:
        """Inverse of `from_components`, in lexicographic order."""
        n = self.dim
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        out = []
        for p, (i, j) in enumerate(pairs):
            for k, l in pairs[p:]:  # noqa: E741
                value = float(self.entries[i, j, k, l])
                if value != 0.0 or not drop_zeros:
                    out.append((i, j, k, l, value))
        return out

    @classmethod
    def zeros(cls, n: int) -> CurvatureTensor:
        return cls(np.zeros((n, n, n, n)))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def component(self, i: int, j: int, k: int, l: int) -> float:  # noqa: E741
        return float(self.entries[i, j, k, l])

    def bianchi_residual(self) -> float:
        """Max absolute value of the first Bianchi cyclic sum."""
        return float(np.max(np.abs(bianchi_cyclic_sum(self.entries))))

    def validate(self, tol: float = VALIDATION_TOL) -> None:
        """Raise ValidationError if the first Bianchi identity fails beyond `tol` (relative)."""
        residual = self.bianchi_residual()
        if residual > tol * _relative_scale(self.entries):
            cyclic = np.abs(bianchi_cyclic_sum(self.entries))
            i, j, k, l = (int(x) for x in np.unravel_index(int(np.argmax(cyclic)), cyclic.shape))  # noqa: E741
            raise ValidationError(
                f"First Bianchi identity fails at ({i},{j},{k},{l}): residual {residual:.3e} exceeds tolerance"
            )

    def in_frame(self, frame: Frame) -> CurvatureTensor:
        """Components Rm(f_a, f_b, f_c, f_d) for the rows f of `frame`."""
        _check_frame_dim(frame, self.dim)
        f = frame.vectors
        out = np.einsum("ai,bj,ck,dl,ijkl->abcd", f, f, f, f, self.entries, optimize=True)
        return CurvatureTensor(enforce_symmetries(out))

    def __add__(self, other: CurvatureTensor) -> CurvatureTensor:
        _check_same_dim(self.dim, other.dim)
        return CurvatureTensor(self.entries + other.entries)

    def __sub__(self, other: CurvatureTensor) -> CurvatureTensor:
        _check_same_dim(self.dim, other.dim)
        return CurvatureTensor(self.entries - other.entries)

    def __mul__(self, scalar: float) -> CurvatureTensor:
        return CurvatureTensor(float(scalar) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> CurvatureTensor:
        return CurvatureTensor(-self.entries)


@dataclass(frozen=True, eq=False)
class Frame:
    """Orthonormal frame; rows of `vectors` are the basis vectors."""

    vectors: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.vectors, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"Frame must be a square matrix, got shape {arr.shape}")
        gram_err = float(np.max(np.abs(arr @ arr.T - np.eye(arr.shape[0]))))
        if gram_err > FRAME_TOL:
            raise FrameError(f"Frame rows are not orthonormal (max Gram error {gram_err:.3e})")
        object.__setattr__(self, "vectors", _readonly(arr))

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[0])

    @classmethod
    def identity(cls, n: int) -> Frame:
        return cls(np.eye(n))


def _check_same_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"Dimension mismatch: {a} != {b}")


def _check_frame_dim(frame: Frame, n: int) -> None:
    if frame.dim != n:
        raise DimensionError(f"Frame has dim {frame.dim}, tensor has dim {n}")


def metric(n: int) -> SymTwoTensor:
    """The metric g in an orthonormal frame."""
    return SymTwoTensor.identity(n)


def _kn_raw(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    return (
        np.einsum("ik,jl->ijkl", s, t)
        - np.einsum("il,jk->ijkl", s, t)
        + np.einsum("jl,ik->ijkl", s, t)
        - np.einsum("jk,il->ijkl", s, t)
    )


def kulkarni_nomizu(s: SymTwoTensor, t: SymTwoTensor) -> CurvatureTensor:
    """Kulkarni–Nomizu product S⊙T.

    (S⊙T)(X,Y,Z,W) = S(X,Z)T(Y,W) − S(X,W)T(Y,Z) + S(Y,W)T(X,Z) − S(Y,Z)T(X,W).
    Symmetric in its arguments bit-for-bit.
    """
    _check_same_dim(s.dim, t.dim)
    raw = 0.5 * (_kn_raw(s.entries, t.entries) + _kn_raw(t.entries, s.entries))
    return CurvatureTensor(enforce_symmetries(raw))


def full_norm_sq(tensor: CurvatureTensor | SymTwoTensor) -> float:
    """Sum of squares over all index tuples."""
    return float(np.sum(np.square(tensor.entries)))


def ricci_contract(rm: CurvatureTensor) -> SymTwoTensor:
    """Ric(X,Y) = Σ_j Rm(X, e_j, Y, e_j)."""
    ric = np.einsum("ijkj->ik", rm.entries)
    return SymTwoTensor(0.5 * (ric + ric.T))


def scalar_curvature(rm: CurvatureTensor) -> float:
    return ricci_contract(rm).trace()


def symmetrize_random(seed: int, dim: int) -> CurvatureTensor:
    """Seeded random algebraic curvature tensor.

    A raw Gaussian array is antisymmetrized in both pairs, symmetrized under
    pair exchange and projected onto the kernel of the Bianchi cyclic sum.
    """
    if dim < 3:
        raise DimensionError(f"Random curvature tensors need dim >= 3, got {dim}")
    rng = np.random.default_rng(seed)
    raw = enforce_symmetries(rng.standard_normal((dim, dim, dim, dim)))
    projected = raw - bianchi_cyclic_sum(raw) / 3.0
    return CurvatureTensor(enforce_symmetries(projected))

"""Eigenvalue-sum inequalities and the theorem threshold constants."""

from __future__ import annotations

import math
from ._compat import StrEnum
from fractions import Fraction

import numpy as np

from .decompose import DecomposedCurvature
from .models import BoundCheck, DimensionError, EqualityCase, PreconditionError, RangeError
from .spectra import symmetric_spectrum

ZERO_SUM_TOL = 1e-9
EQUALITY_TOL = 1e-9


class ThresholdKind(StrEnum):
    """Named pinching constants."""

    THM14 = "thm14"
    THM14_HALF = "thm14_half"
    COR34 = "cor34"
    THM15 = "thm15"
    THM16 = "thm16"
    COR17 = "cor17"
    THM19_1 = "thm19_1"
    THM19_2 = "thm19_2"
    GB4 = "gb4"
    HT25 = "ht25"


_MIN_DIM: dict[ThresholdKind, int] = {
    ThresholdKind.THM14: 4,
    ThresholdKind.THM14_HALF: 6,
    ThresholdKind.COR34: 4,
    ThresholdKind.THM15: 3,
    ThresholdKind.THM16: 8,
    ThresholdKind.COR17: 4,
    ThresholdKind.THM19_1: 4,
    ThresholdKind.THM19_2: 8,
    ThresholdKind.GB4: 4,
    ThresholdKind.HT25: 6,
}

_K_DEPENDENT = {
    ThresholdKind.COR34,
    ThresholdKind.THM15,
    ThresholdKind.THM16,
    ThresholdKind.COR17,
    ThresholdKind.THM19_1,
}


def bivector_dim(n: int) -> int:
    return n * (n - 1) // 2


def _sqrt_fraction(value: Fraction) -> float:
    return math.sqrt(float(value))


def threshold(kind: ThresholdKind | str, n: int, k: int = 1) -> float:
    """Coefficient of a (or of λ(g)) in the named pinching hypothesis.

    `n` is the manifold dimension for every kind; `thm14_half` and `ht25`
    read the half-dimension n/2 into their formulas.
    """
    try:
        kind = ThresholdKind(kind)
    except ValueError:
        raise RangeError(f"Unknown threshold kind: {kind!r}") from None

    if n < _MIN_DIM[kind]:
        raise RangeError(f"{kind.value} needs n >= {_MIN_DIM[kind]}, got {n}")
    big_n = bivector_dim(n)
    if kind in _K_DEPENDENT and not 1 <= k <= big_n - 1:
        raise RangeError(f"{kind.value} needs 1 <= k <= {big_n - 1}, got {k}")

    if kind is ThresholdKind.THM14:
        return _sqrt_fraction(Fraction(n * (n - 1), (n + 1) * (n - 2)))
    if kind is ThresholdKind.THM14_HALF:
        if n % 2:
            raise RangeError(f"thm14_half needs an even dimension, got {n}")
        h = n // 2
        return _sqrt_fraction(Fraction(h * (h - 1), (h + 1) * (h - 2)))
    if kind is ThresholdKind.COR34:
        return _sqrt_fraction(Fraction(k * big_n, big_n - k))
    if kind is ThresholdKind.THM15:
        return _sqrt_fraction(Fraction(k * big_n, big_n - k)) * (n - 2) / n
    if kind is ThresholdKind.THM16:
        return _sqrt_fraction(Fraction(big_n * k, big_n - k)) / (n * (n - 1))
    if kind is ThresholdKind.COR17:
        return (n - 2) / (n * n * (n - 1)) * _sqrt_fraction(Fraction(k * (big_n - k), big_n))
    if kind is ThresholdKind.THM19_1:
        base = _sqrt_fraction(Fraction(big_n * k, big_n - k))
        return base * min(1.0, n * (n - 2) / (8.0 * (n - 1)))
    if kind is ThresholdKind.THM19_2:
        return 1.0 / (math.sqrt(2.0 * n) * (n - 1))
    if kind is ThresholdKind.GB4:
        if n != 4:
            raise RangeError(f"gb4 is a four-dimensional statement, got n={n}")
        return 8.0 * math.pi**2
    # HT25
    if n % 2:
        raise RangeError(f"ht25 needs an even dimension, got {n}")
    h = n // 2
    return _sqrt_fraction(Fraction(h * (h - 3), h - 1))


def lemma32_bound(a: np.ndarray | list[float], k: int) -> BoundCheck:
    """Zero-sum lowest-k bound Σ_{i≤k} a_i ≥ −√(k(N−k)/N)·|a|, with equality classification."""
    seq = np.sort(np.asarray(a, dtype=float))
    big_n = seq.size
    if not 1 <= k <= big_n:
        raise RangeError(f"k must lie in [1, {big_n}], got {k}")
    max_abs = float(np.max(np.abs(seq))) if big_n else 0.0
    drift = float(np.sum(seq))
    if abs(drift) >= ZERO_SUM_TOL * (1.0 + max_abs):
        raise PreconditionError(f"Sequence must sum to zero (sum = {drift:.3e})")
    seq = seq - drift / big_n

    lhs = float(np.sum(seq[:k]))
    rhs = -math.sqrt(k * (big_n - k) / big_n) * float(np.linalg.norm(seq))
    return BoundCheck.evaluate(lhs, rhs, _equality_case(seq, k))


def _equality_case(seq: np.ndarray, k: int) -> EqualityCase | None:
    big_n = seq.size
    tol = EQUALITY_TOL * (1.0 + float(np.max(np.abs(seq))))
    if float(np.max(np.abs(seq))) <= tol:
        return EqualityCase.ALL_ZERO
    if k == big_n:
        return None
    c = float(np.mean(seq[k:])) / k
    if c <= tol:
        return None
    low_ok = np.all(np.abs(seq[:k] + (big_n - k) * c) <= tol)
    high_ok = np.all(np.abs(seq[k:] - k * c) <= tol)
    return EqualityCase.TWO_LEVEL if low_ok and high_ok else None


def _check_square_pair(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise DimensionError(f"Expected two square matrices of equal shape, got {a.shape} and {b.shape}")


def eigen_sum_subadditivity(
    a: np.ndarray,
    b: np.ndarray,
    k: int,
) -> tuple[BoundCheck, BoundCheck]:
    """Lower-sum superadditivity and upper-sum subadditivity of eigenvalues.

    lower: Σ_{j≤k} λ_j(A+B) ≥ Σ_{j≤k} (λ_j(A) + λ_j(B))
    upper: Σ_{j>N−k} (λ_j(A) + λ_j(B)) ≥ Σ_{j>N−k} λ_j(A+B)
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_square_pair(a, b)
    sa, sb, sab = symmetric_spectrum(a), symmetric_spectrum(b), symmetric_spectrum(a + b)
    lower = BoundCheck.evaluate(sab.lower_sum(k), sa.lower_sum(k) + sb.lower_sum(k))
    upper = BoundCheck.evaluate(sa.upper_sum(k) + sb.upper_sum(k), sab.upper_sum(k))
    return lower, upper


def ky_fan_value(a: np.ndarray, x: np.ndarray) -> float:
    """Σ_j ⟨x_j, A x_j⟩ for the orthonormal columns of x."""
    x = np.asarray(x, dtype=float)
    gram_err = float(np.max(np.abs(x.T @ x - np.eye(x.shape[1]))))
    if gram_err > 1e-10:
        raise PreconditionError(f"Columns are not orthonormal (max Gram error {gram_err:.3e})")
    return float(np.trace(x.T @ np.asarray(a, dtype=float) @ x))


def ky_fan_check(
    a: np.ndarray,
    k: int,
    trials: int,
    seed: int,
    *,
    largest: bool = True,
) -> BoundCheck:
    """Compare the extremal eigen-sum with random orthonormal k-frames.

    With largest=True: lhs = Σ of the k largest eigenvalues, rhs = max over
    trials of Σ⟨x_j, A x_j⟩. With largest=False the minimum principle is
    checked: lhs = min over trials, rhs = Σ of the k smallest eigenvalues.
    """
    a = np.asarray(a, dtype=float)
    spec = symmetric_spectrum(a)
    size = spec.size
    if not 1 <= k <= size:
        raise RangeError(f"k must lie in [1, {size}], got {k}")
    rng = np.random.default_rng(seed)
    frames, _ = np.linalg.qr(rng.standard_normal((trials, size, k)))
    values = np.einsum("tik,ij,tjk->t", frames, a, frames)
    if largest:
        return BoundCheck.evaluate(spec.upper_sum(k), float(np.max(values)))
    return BoundCheck.evaluate(float(np.min(values)), spec.lower_sum(k))


def concentration_check(a: np.ndarray) -> list[BoundCheck]:
    """|λ_i − trA/N| ≤ [((N−1)/N)(‖A‖₂² − (trA)²/N)]^{1/2} for every i (lhs = bound)."""
    a = np.asarray(a, dtype=float)
    spec = symmetric_spectrum(a)
    size = spec.size
    trace = float(np.trace(a))
    spread = float(np.sum(a * a)) - trace * trace / size
    bound = math.sqrt(max((size - 1) / size * spread, 0.0))
    mean = trace / size
    return [BoundCheck.evaluate(bound, abs(float(mu) - mean)) for mu in spec.eigenvalues]


def lemma44_check(n: int, p: int) -> BoundCheck:
    """1 + 1/(n−p) > 4p(n−p)/(n(n−2)) for n ≥ 8, 1 ≤ p ≤ n/2 − 2, in exact arithmetic."""
    if n < 8 or p < 1 or 2 * p > n - 4:
        raise RangeError(f"Need n >= 8 and 1 <= p <= n/2 - 2, got n={n}, p={p}")
    lhs = 1 + Fraction(1, n - p)
    rhs = Fraction(4 * p * (n - p), n * (n - 2))
    return BoundCheck(lhs=float(lhs), rhs=float(rhs), slack=float(lhs - rhs), holds=lhs > rhs)


def lemma44_exhaustive(n_min: int = 8, n_max: int = 64) -> list[tuple[int, int, BoundCheck]]:
    """Every admissible (n, p) with n_min ≤ n ≤ n_max."""
    return [(n, p, lemma44_check(n, p)) for n in range(n_min, n_max + 1) for p in range(1, (n - 4) // 2 + 1)]


def sobolev_chain_check(n: int, p: int) -> BoundCheck:
    """1 ≥ (4p(n−p)/(n(n−2)))·((n−2)/n), exactly; equality at p = n/2."""
    if n < 3 or not 1 <= p <= n - 1:
        raise RangeError(f"Need n >= 3 and 1 <= p <= n - 1, got n={n}, p={p}")
    rhs = Fraction(4 * p * (n - p), n * (n - 2)) * Fraction(n - 2, n)
    lhs = Fraction(1)
    return BoundCheck(lhs=1.0, rhs=float(rhs), slack=float(lhs - rhs), holds=lhs >= rhs)


def _spread_coefficient(n: int, k: int) -> float:
    big_n = bivector_dim(n)
    if not 1 <= k <= big_n:
        raise RangeError(f"k must lie in [1, {big_n}], got {k}")
    return math.sqrt(k * (big_n - k) / big_n)


def prop33_bounds(a: float, weyl_norm: float, n: int, k: int) -> tuple[float, float]:
    """(ka − c|𝒲|, ka + c|𝒲|) with c = √(k(N−k)/N)."""
    if weyl_norm < 0:
        raise PreconditionError(f"Weyl norm must be nonnegative, got {weyl_norm}")
    c = _spread_coefficient(n, k)
    return k * a - c * weyl_norm, k * a + c * weyl_norm


def prop46_bound(scalar: float, ric0_norm: float, weyl_norm: float, n: int, k: int) -> float:
    """kR/(n(n−1)) − √(k(N−k)/N)(√(1/(n−2))|Ric̊| + |𝒲|)."""
    if n < 4:
        raise DimensionError(f"Eigenvalue bound needs n >= 4, got {n}")
    if ric0_norm < 0 or weyl_norm < 0:
        raise PreconditionError("Norms must be nonnegative")
    c = _spread_coefficient(n, k)
    return k * scalar / (n * (n - 1)) - c * (math.sqrt(1.0 / (n - 2)) * ric0_norm + weyl_norm)


def concircular_domination(d: DecomposedCurvature) -> BoundCheck:
    """|Z| ≥ (2/√5)(√(1/(n−2))|Ric̊| + |𝒲|)."""
    n = d.dim
    z_norm = math.sqrt(float(np.sum(np.square(d.concircular.entries))))
    pinching = math.sqrt(1.0 / (n - 2)) * d.traceless_ricci_norm + d.weyl_norm
    return BoundCheck.evaluate(z_norm, 2.0 / math.sqrt(5.0) * pinching)

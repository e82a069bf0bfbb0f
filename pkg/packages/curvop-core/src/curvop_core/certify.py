"""Theorem hypothesis checks on a single tensor or on a sampled curvature field.

Every check returns a CertificateReport: the hypothesis quantities, the
threshold they are compared with, the margin (threshold side minus quantity
side, positive when the hypothesis holds), a verdict and the predicted
conclusion. Topology is never computed; conclusions are text.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from ._compat import StrEnum
from typing import Any, TypeVar

import numpy as np

from . import bounds
from .bounds import ThresholdKind, bivector_dim, threshold
from .conclusions import get_text
from .decompose import DecomposedCurvature, orthogonal_decompose, pinching_quantity
from .models import (
    STRICT_TOL,
    BoundCheck,
    CertificateReport,
    DimensionError,
    EmptyFieldError,
    NotConformallyFlatError,
    PreconditionError,
    RangeError,
    UsageError,
    ValidationError,
    Verdict,
    strict_verdict,
)
from .ricci_k import DEFAULT_RESTARTS, DEFAULT_TOL, RicKResult, ric_k_min
from .spectra import (
    SpectralSummary,
    curvature_operator,
    is_conformally_flat,
    pair_eigenvalues,
    quasi_positive_quantity,
    ricci_eigenframe,
    sectional_range,
    spectrum,
)
from .tensors import CurvatureTensor, full_norm_sq

logger = logging.getLogger(__name__)

T = TypeVar("T")

# A user-supplied sectional bound may exceed the searched extremum by this much.
SECTIONAL_SLACK = 1e-6


class PointwiseTheorem(StrEnum):
    THM14_POS = "thm14_pos"
    THM14_NEG = "thm14_neg"
    COR34 = "cor34"
    COR25_LCF = "cor25_lcf"
    THM27_LCF = "thm27_lcf"
    THM210_LCF = "thm210_lcf"
    COR28_QUASIPOS = "cor28_quasipos"
    DIAM_BETTI_HYP = "diam_betti_hyp"
    HT25_HYP = "ht25_hyp"
    EULER_SIGN = "euler_sign"


class FieldTheorem(StrEnum):
    THM15 = "thm15"
    THM16 = "thm16"
    COR17 = "cor17"
    GB4 = "gb4"
    PROP43_YAMABE_LB = "prop43_yamabe_lb"
    THM19_GAP1 = "thm19_gap1"
    THM19_GAP2 = "thm19_gap2"
    COR28_QUASIPOS = "cor28_quasipos"


@dataclass(slots=True, frozen=True)
class CertifyParams:
    """Theorem parameters and Ric_k search settings."""

    k: int | None = None
    a: float | None = None
    yamabe: float | None = None
    ricci_lower: float | None = None
    diameter: float | None = None
    harmonic_weyl: bool = False
    restarts: int = DEFAULT_RESTARTS
    seed: int = 0
    tol: float = DEFAULT_TOL
    threads: int = 1


@dataclass(slots=True, frozen=True)
class FieldSample:
    weight: float
    tensor: CurvatureTensor


@dataclass(frozen=True, eq=False)
class CurvatureField:
    """Quadrature samples (volume weight, tensor) of a curvature field."""

    samples: tuple[FieldSample, ...]

    def __post_init__(self) -> None:
        samples = tuple(self.samples)
        for idx, sample in enumerate(samples):
            if not sample.weight > 0 or not math.isfinite(sample.weight):
                raise ValidationError(f"Sample #{idx} has non-positive weight {sample.weight!r}")
        dims = {s.tensor.dim for s in samples}
        if len(dims) > 1:
            raise DimensionError(f"Field samples have mixed dimensions {sorted(dims)}")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[float, CurvatureTensor]]) -> CurvatureField:
        return cls(tuple(FieldSample(float(w), t) for w, t in pairs))

    @classmethod
    def constant(cls, tensor: CurvatureTensor, volume: float = 1.0) -> CurvatureField:
        return cls((FieldSample(float(volume), tensor),))

    @property
    def dim(self) -> int:
        if not self.samples:
            raise EmptyFieldError()
        return self.samples[0].tensor.dim

    @property
    def total_volume(self) -> float:
        return float(sum(s.weight for s in self.samples))

    @property
    def weights(self) -> np.ndarray:
        return np.array([s.weight for s in self.samples], dtype=float)

    def rescaled(self, c: float) -> CurvatureField:
        """Field of the homothetic metric c·g: curvature scales by 1/c, volume by c^{n/2}."""
        if c <= 0:
            raise RangeError(f"Homothety factor must be positive, got {c}")
        n = self.dim
        return CurvatureField(tuple(FieldSample(s.weight * c ** (n / 2), (1.0 / c) * s.tensor) for s in self.samples))


def _lp(weights: np.ndarray, values: np.ndarray, p: float) -> float:
    if np.any(values < 0):
        raise PreconditionError("L^p quantities must be nonnegative")
    return float(np.sum(weights * values**p) ** (1.0 / p))


def lp_norm(
    field: CurvatureField,
    quantity: Callable[[CurvatureTensor], float],
    p: float | None = None,
) -> float:
    """(Σ wₛ qₛ^p)^{1/p}, with p = n/2 by default."""
    if not field.samples:
        raise EmptyFieldError()
    if p is None:
        p = field.dim / 2.0
    if p < 1:
        raise RangeError(f"p must be >= 1, got {p}")
    values = np.array([quantity(s.tensor) for s in field.samples], dtype=float)
    return _lp(field.weights, values, p)


def sphere_volume(n: int) -> float:
    """Volume of the unit round n-sphere, 2π^{(n+1)/2}/Γ((n+1)/2)."""
    if n < 1:
        raise RangeError(f"n must be >= 1, got {n}")
    return 2.0 * math.pi ** ((n + 1) / 2.0) / math.gamma((n + 1) / 2.0)


def yamabe_upper_bound(n: int) -> float:
    """λ(Sⁿ) = n(n−1)Vol(Sⁿ)^{2/n}, an upper bound for every Yamabe constant."""
    return n * (n - 1) * sphere_volume(n) ** (2.0 / n)


def prop43_lower_bound(n: int, a: float, volume: float) -> float:
    """λ(g) ≥ n(n−1)a·Vol(g)^{2/n} when Ric ≥ (n−1)a > 0."""
    if n < 3:
        raise RangeError(f"n must be >= 3, got {n}")
    if not a > 0:
        raise RangeError(f"Ricci lower bound constant must be positive, got {a}")
    if not volume > 0:
        raise RangeError(f"Volume must be positive, got {volume}")
    return n * (n - 1) * a * volume ** (2.0 / n)


def prop43_chain(n: int, a: float, volume: float, yamabe: float | None = None) -> list[BoundCheck]:
    """[a·Vol^{2/n} ≤ λ/(n(n−1)), λ/(n(n−1)) ≤ Vol(Sⁿ)^{2/n}] with λ the given or lower-bound value."""
    lower = prop43_lower_bound(n, a, volume)
    lam = lower if yamabe is None else yamabe
    scaled = lam / (n * (n - 1))
    return [
        BoundCheck.evaluate(scaled, a * volume ** (2.0 / n)),
        BoundCheck.evaluate(sphere_volume(n) ** (2.0 / n), scaled),
    ]


def _map_ordered(func: Callable[[Any], T], items: Sequence[Any], threads: int) -> list[T]:
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(func, items))
    return [func(item) for item in items]


def _nonstrict_verdict(margin: float, scale: float) -> Verdict:
    if margin >= -STRICT_TOL * (1.0 + abs(scale)):
        return Verdict.HYPOTHESES_MET
    return Verdict.NOT_MET


def _require_k(params: CertifyParams, theorem: str) -> int:
    if params.k is None:
        raise UsageError(f"{theorem} needs k")
    return params.k


def _check_k_range(k: int, low: int, high: int, theorem: str) -> None:
    if not low <= k <= high:
        raise RangeError(f"{theorem} needs {low} <= k <= {high}, got {k}")


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _require_flat(d: DecomposedCurvature, theorem: str) -> None:
    if not is_conformally_flat(d):
        raise NotConformallyFlatError(
            f"{theorem} needs a conformally flat tensor; |𝒲|² = {full_norm_sq(d.weyl):.3e}"
        )


def _ric_k(rm: CurvatureTensor, k: int, params: CertifyParams, *, threads: int | None = None) -> RicKResult:
    return ric_k_min(
        rm,
        k,
        params.restarts,
        params.seed,
        params.tol,
        threads=params.threads if threads is None else threads,
    )


def _search_note(result: RicKResult, label: str) -> list[str]:
    if result.converged:
        return []
    return [f"{label} search did not settle; the reported value is an upper estimate of the true minimum"]


def _base_inputs(n: int, **extra: Any) -> dict[str, Any]:
    inputs: dict[str, Any] = {"dimension": n}
    inputs.update(extra)
    return inputs


def _report(
    theorem: str,
    inputs: dict[str, Any],
    values: dict[str, Any],
    thr: float,
    margin: float,
    verdict: Verdict,
    conclusion: str,
    notes: list[str],
) -> CertificateReport:
    logger.info("%s: %s (margin %.6g)", theorem, verdict.value, margin)
    return CertificateReport(
        theorem_id=theorem,
        inputs=inputs,
        hypothesis_values=values,
        threshold=float(thr),
        margin=float(margin),
        verdict=verdict,
        conclusion_text=conclusion,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Pointwise theorems


def _thm14(rm: CurvatureTensor, params: CertifyParams, *, negative: bool) -> CertificateReport:
    theorem = PointwiseTheorem.THM14_NEG if negative else PointwiseTheorem.THM14_POS
    n = rm.dim
    if n % 2:
        raise RangeError(f"{theorem.value} is stated for even dimensions, got {n}")
    coef = threshold(ThresholdKind.THM14, n)
    d = orthogonal_decompose(rm)
    spec = spectrum(curvature_operator(rm))

    # sec ≤ −a is sec(−Rm) ≥ a.
    search = _ric_k(-rm if negative else rm, 1, params)
    sectional = search.value
    extremum = -sectional if negative else sectional
    notes = _search_note(search, "sectional curvature")
    a = sectional if params.a is None else params.a
    verdict_override = None
    if params.a is not None and params.a > sectional + SECTIONAL_SLACK * (1.0 + abs(sectional)):
        bound = "sec ≤ −a" if negative else "sec ≥ a"
        notes.append(f"{bound} fails: searched extremal sectional curvature is {extremum!r}")
        verdict_override = Verdict.NOT_MET

    thr = coef * a
    margin = thr - d.weyl_norm
    verdict = verdict_override or strict_verdict(margin, thr)
    mu = float(spec.eigenvalues[-1] if negative else spec.eigenvalues[0])
    if verdict is Verdict.HYPOTHESES_MET and (mu >= 0 if negative else mu <= 0):
        label = "μ_N" if negative else "μ₁"
        notes.append(get_text("notes.contradiction", detail=f"hypotheses met but {label} = {mu!r}"))

    half = threshold(ThresholdKind.THM14_HALF, n) if n >= 6 else None
    notes.append(get_text("thm14_pos.discrepancy", half="undefined for n < 6" if half is None else repr(half)))
    values = {
        "weyl_norm": d.weyl_norm,
        "a": a,
        "a_source": "sectional_search" if params.a is None else "user",
        "sectional_extremum": extremum,
        "coefficient": coef,
        "mu_1": float(spec.eigenvalues[0]),
        "mu_N": float(spec.eigenvalues[-1]),
    }
    inputs = _base_inputs(n, a=params.a, restarts=params.restarts, seed=params.seed)
    key = "thm14_neg.conclusion" if negative else "thm14_pos.conclusion"
    return _report(theorem.value, inputs, values, thr, margin, verdict, get_text(key), notes)


def _cor34(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.COR34.value
    n = rm.dim
    k = _require_k(params, theorem)
    big_n = bivector_dim(n)
    coef = threshold(ThresholdKind.COR34, n, k)
    d = orthogonal_decompose(rm)
    spec = spectrum(curvature_operator(rm))

    search = _ric_k(rm, 1, params)
    notes = _search_note(search, "sectional curvature")
    a = search.value if params.a is None else params.a
    verdict_override = None
    if params.a is not None and params.a > search.value + SECTIONAL_SLACK * (1.0 + abs(search.value)):
        notes.append(f"sec ≥ a fails: searched minimal sectional curvature is {search.value!r}")
        verdict_override = Verdict.NOT_MET

    thr = coef * a
    margin = thr - d.weyl_norm
    verdict = verdict_override or strict_verdict(margin, thr)
    lower_sum = spec.lower_sum(k)
    if verdict is Verdict.HYPOTHESES_MET and lower_sum <= 0:
        notes.append(get_text("notes.contradiction", detail=f"hypotheses met but μ₁+⋯+μ_{k} = {lower_sum!r}"))

    values: dict[str, Any] = {
        "weyl_norm": d.weyl_norm,
        "a": a,
        "a_source": "sectional_search" if params.a is None else "user",
        "sectional_min": search.value,
        "coefficient": coef,
        "eigen_sum": lower_sum,
        "eigen_sum_lower_bound": bounds.prop33_bounds(a, d.weyl_norm, n, k)[0],
    }
    if k <= n - 1:
        values["ric_k"] = _ric_k(rm, k, params).value
    if k <= _ceil_half(n):
        conclusion = get_text("cor34.small_k", k=k)
    elif k <= n - 1:
        conclusion = get_text("cor34.large_k", k=k)
    else:
        conclusion = get_text("cor34.out_of_range", k=k)
    inputs = _base_inputs(n, k=k, a=params.a, N=big_n, restarts=params.restarts, seed=params.seed)
    return _report(theorem, inputs, values, thr, margin, verdict, conclusion, notes)


def _flat_spectrum(rm: CurvatureTensor, theorem: str) -> tuple[DecomposedCurvature, SpectralSummary, np.ndarray]:
    n = rm.dim
    if n < 4:
        raise DimensionError(f"{theorem} needs n >= 4, got {n}")
    d = orthogonal_decompose(rm)
    _require_flat(d, theorem)
    _, lam = ricci_eigenframe(d.ricci)
    return d, spectrum(curvature_operator(rm)), lam


def _cor25(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.COR25_LCF.value
    d, spec, lam = _flat_spectrum(rm, theorem)
    n = rm.dim
    pairs = pair_eigenvalues(lam, d.scalar)
    predicted = np.sort(pairs)
    scale = 1.0 + float(np.max(np.abs(spec.eigenvalues)))
    mismatch = float(np.max(np.abs(predicted - spec.eigenvalues)))
    notes: list[str] = []
    if mismatch > 1e-8 * scale:
        notes.append(get_text("notes.contradiction", detail=f"spectrum differs from λ_ij by {mismatch:.3e}"))
    # λ_12 ≤ λ_13 smallest, λ_(n−2)n ≤ λ_(n−1)n largest in 0-based pair order.
    index = {(i, j): p for p, (i, j) in enumerate((i, j) for i in range(n) for j in range(i + 1, n))}
    ordering_ok = (
        abs(pairs[index[(0, 1)]] - spec.eigenvalues[0]) <= 1e-8 * scale
        and abs(pairs[index[(0, 2)]] - spec.eigenvalues[1]) <= 1e-8 * scale
        and abs(pairs[index[(n - 3, n - 1)]] - spec.eigenvalues[-2]) <= 1e-8 * scale
        and abs(pairs[index[(n - 2, n - 1)]] - spec.eigenvalues[-1]) <= 1e-8 * scale
    )
    if not ordering_ok:
        notes.append(get_text("notes.contradiction", detail="extremal λ_ij are not at the predicted pairs"))

    thr = 1e-9 * (1.0 + full_norm_sq(rm))
    weyl_sq = full_norm_sq(d.weyl)
    values = {
        "weyl_norm_sq": weyl_sq,
        "ricci_eigenvalues": [float(x) for x in lam],
        "pair_eigenvalues": [float(x) for x in pairs],
        "spectrum_mismatch": mismatch,
    }
    inputs = _base_inputs(n)
    conclusion = get_text("cor25_lcf.conclusion")
    return _report(theorem, inputs, values, thr, thr - weyl_sq, Verdict.HYPOTHESES_MET, conclusion, notes)


def _thm27(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.THM27_LCF.value
    d, spec, _ = _flat_spectrum(rm, theorem)
    n = rm.dim
    low, high = sectional_range(spec, full_norm_sq(d.weyl), full_norm_sq(rm))
    scale = STRICT_TOL
    notes: list[str] = []
    if low > scale:
        verdict, margin, conclusion = Verdict.HYPOTHESES_MET, low, get_text("thm27_lcf.positive")
    elif high < -scale:
        verdict, margin, conclusion = Verdict.HYPOTHESES_MET, -high, get_text("thm27_lcf.negative")
    elif high <= scale:
        verdict, margin, conclusion = Verdict.HYPOTHESES_MET, -high, get_text("thm27_lcf.nonpositive")
    else:
        verdict, margin, conclusion = Verdict.NOT_MET, max(low, -high), get_text("thm27_lcf.hypothesis")
        notes.append("sectional curvature takes both signs")
    if verdict is Verdict.HYPOTHESES_MET and n % 2:
        notes.append("odd dimension: the Euler characteristic vanishes and only Betti conclusions apply")
    values = {"sectional_min": low, "sectional_max": high}
    return _report(theorem, _base_inputs(n), values, 0.0, margin, verdict, conclusion, notes)


def _thm210(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.THM210_LCF.value
    n = rm.dim
    k = _require_k(params, theorem)
    _check_k_range(k, 1, n - 1, theorem)
    _, spec, _ = _flat_spectrum(rm, theorem)
    search = _ric_k(rm, k, params)
    notes = _search_note(search, f"Ric_{k}")
    margin = search.value
    verdict = strict_verdict(margin, 0.0)
    lower_sum = spec.lower_sum(k)
    if verdict is Verdict.HYPOTHESES_MET and lower_sum <= 0:
        notes.append(
            get_text("notes.contradiction", detail=f"Ric_{k} = {search.value!r} > 0 but μ₁+⋯+μ_{k} = {lower_sum!r}")
        )
    key = "thm210_lcf.small_k" if k <= _ceil_half(n) else "thm210_lcf.large_k"
    values = {
        "ric_k": search.value,
        "argmin_direction": [float(x) for x in search.argmin_direction],
        "eigen_sum": lower_sum,
    }
    inputs = _base_inputs(n, k=k, restarts=params.restarts, seed=params.seed)
    return _report(theorem, inputs, values, 0.0, margin, verdict, get_text(key, k=k), notes)


def _cor28(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.COR28_QUASIPOS.value
    d, _, lam = _flat_spectrum(rm, theorem)
    n = rm.dim
    q = quasi_positive_quantity(lam, d.scalar, n)
    verdict = strict_verdict(q, 0.0)
    notes: list[str] = []
    if verdict is Verdict.DEGENERATE:
        notes.append("quantity is zero at this point; quasi-positivity needs a positive value somewhere on the field")
    values = {"quasi_positive_quantity": q, "ricci_eigenvalues": [float(x) for x in lam], "scalar": d.scalar}
    conclusion = get_text("cor28_quasipos.conclusion")
    return _report(theorem, _base_inputs(n), values, 0.0, q, verdict, conclusion, notes)


def _diam_betti(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.DIAM_BETTI_HYP.value
    n = rm.dim
    if n < 4:
        raise DimensionError(f"{theorem} needs n >= 4, got {n}")
    k = _require_k(params, theorem)
    _check_k_range(k, _ceil_half(n), n - 1, theorem)
    if params.a is None:
        raise UsageError(f"{theorem} needs a")
    big_n = bivector_dim(n)
    coef = math.sqrt(k * (big_n - k) / big_n)
    d = orthogonal_decompose(rm)
    search = _ric_k(rm, k, params)
    notes = _search_note(search, f"Ric_{k}")
    thr = k * params.a
    margin = search.value - coef * d.weyl_norm - thr
    verdict = _nonstrict_verdict(margin, thr)
    values: dict[str, Any] = {"ric_k": search.value, "weyl_norm": d.weyl_norm, "coefficient": coef, "a": params.a}
    if params.diameter is not None:
        values["diameter"] = params.diameter
        values["aD2"] = params.a * params.diameter**2
    inputs = _base_inputs(n, k=k, a=params.a, diameter=params.diameter, restarts=params.restarts, seed=params.seed)
    return _report(theorem, inputs, values, thr, margin, verdict, get_text("diam_betti_hyp.conclusion"), notes)


def _ht25(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.HT25_HYP.value
    n = rm.dim
    coef = threshold(ThresholdKind.HT25, n)
    if params.diameter is None:
        raise UsageError(f"{theorem} needs a diameter")
    if params.diameter <= 0:
        raise RangeError(f"diameter must be positive, got {params.diameter}")
    h = n // 2
    d = orthogonal_decompose(rm)
    search = _ric_k(rm, h, params)
    notes = _search_note(search, f"Ric_{h}")
    quantity = (search.value - coef * d.weyl_norm) * params.diameter**2
    verdict = _nonstrict_verdict(quantity, 0.0)
    if verdict is Verdict.NOT_MET:
        notes.append("quantity is negative; an unknown ε(n) may still admit it")
    notes.append("b_1(M) ≥ 1 is a topological hypothesis and is not checked")
    values = {"ric_h": search.value, "weyl_norm": d.weyl_norm, "coefficient": coef, "quantity": quantity}
    inputs = _base_inputs(n, diameter=params.diameter, restarts=params.restarts, seed=params.seed)
    return _report(theorem, inputs, values, 0.0, quantity, verdict, get_text("ht25_hyp.conclusion"), notes)


def _euler_sign(rm: CurvatureTensor, params: CertifyParams) -> CertificateReport:
    theorem = PointwiseTheorem.EULER_SIGN.value
    n = rm.dim
    spec = spectrum(curvature_operator(rm))
    mu_1, mu_n = float(spec.eigenvalues[0]), float(spec.eigenvalues[-1])
    values = {"mu_1": mu_1, "mu_N": mu_n}
    inputs = _base_inputs(n)
    if n % 2:
        notes = ["odd dimension: χ(M) = 0 for every closed manifold"]
        return _report(theorem, inputs, values, 0.0, 0.0, Verdict.NOT_MET, "", notes)
    tol = STRICT_TOL
    if mu_1 > tol:
        return _report(theorem, inputs, values, 0.0, mu_1, Verdict.HYPOTHESES_MET, get_text("euler_sign.positive"), [])
    if mu_1 >= -tol:
        return _report(theorem, inputs, values, 0.0, mu_1, Verdict.HYPOTHESES_MET, get_text("euler_sign.nonneg"), [])
    if mu_n < -tol:
        return _report(theorem, inputs, values, 0.0, -mu_n, Verdict.HYPOTHESES_MET, get_text("euler_sign.negative"), [])
    if mu_n <= tol:
        conclusion = get_text("euler_sign.nonpositive")
        return _report(theorem, inputs, values, 0.0, -mu_n, Verdict.HYPOTHESES_MET, conclusion, [])
    notes = ["curvature operator is indefinite"]
    return _report(theorem, inputs, values, 0.0, max(mu_1, -mu_n), Verdict.NOT_MET, "", notes)


_POINTWISE: dict[PointwiseTheorem, Callable[[CurvatureTensor, CertifyParams], CertificateReport]] = {
    PointwiseTheorem.THM14_POS: lambda rm, p: _thm14(rm, p, negative=False),
    PointwiseTheorem.THM14_NEG: lambda rm, p: _thm14(rm, p, negative=True),
    PointwiseTheorem.COR34: _cor34,
    PointwiseTheorem.COR25_LCF: _cor25,
    PointwiseTheorem.THM27_LCF: _thm27,
    PointwiseTheorem.THM210_LCF: _thm210,
    PointwiseTheorem.COR28_QUASIPOS: _cor28,
    PointwiseTheorem.DIAM_BETTI_HYP: _diam_betti,
    PointwiseTheorem.HT25_HYP: _ht25,
    PointwiseTheorem.EULER_SIGN: _euler_sign,
}


def certify_pointwise(
    rm: CurvatureTensor,
    theorem: PointwiseTheorem | str,
    params: CertifyParams | None = None,
) -> CertificateReport:
    """Check a pointwise theorem's hypotheses on one tensor."""
    try:
        key = PointwiseTheorem(theorem)
    except ValueError:
        known = ", ".join(t.value for t in PointwiseTheorem)
        raise UsageError(f"Unknown pointwise theorem {theorem!r}; expected one of: {known}") from None
    return _POINTWISE[key](rm, params or CertifyParams())


# ---------------------------------------------------------------------------
# Field theorems


@dataclass(slots=True, frozen=True)
class _SampleStats:
    weyl_norm: float
    traceless_ricci_norm: float
    pinching: float
    scalar: float
    ricci_min: float
    weyl_norm_sq: float
    conformally_flat: bool
    quasi_positive: float | None
    ric_k: RicKResult | None


def _sample_stats(
    field: CurvatureField,
    params: CertifyParams,
    *,
    k: int | None = None,
    quasi: bool = False,
) -> list[_SampleStats]:
    def _one(sample: FieldSample) -> _SampleStats:
        d = orthogonal_decompose(sample.tensor)
        _, lam = ricci_eigenframe(d.ricci)
        flat = is_conformally_flat(d)
        return _SampleStats(
            weyl_norm=d.weyl_norm,
            traceless_ricci_norm=d.traceless_ricci_norm,
            pinching=pinching_quantity(d),
            scalar=d.scalar,
            ricci_min=float(lam[0]),
            weyl_norm_sq=full_norm_sq(d.weyl),
            conformally_flat=flat,
            quasi_positive=quasi_positive_quantity(lam, d.scalar, d.dim) if quasi and flat else None,
            ric_k=_ric_k(sample.tensor, k, params, threads=1) if k is not None else None,
        )

    return _map_ordered(_one, field.samples, params.threads)


def _ric_k_a(stats: list[_SampleStats], params: CertifyParams, k: int) -> tuple[float, list[str]]:
    """(a, notes) with a = min over samples of Ric_k/k unless supplied."""
    if params.a is not None:
        return params.a, []
    results = [s.ric_k for s in stats if s.ric_k is not None]
    notes: list[str] = []
    if not all(r.converged for r in results):
        notes.append(f"Ric_{k} search did not settle on every sample; a may be overestimated")
    return min(r.value for r in results) / k, notes


def _resolve_yamabe(
    field: CurvatureField,
    stats: list[_SampleStats],
    params: CertifyParams,
    theorem: str,
) -> tuple[float, str]:
    if params.yamabe is not None:
        return params.yamabe, "user"
    if params.ricci_lower is None:
        raise UsageError(f"{theorem} needs a Yamabe constant (--yamabe) or a Ricci lower bound (--ricci-lower)")
    n = field.dim
    observed = min(s.ricci_min for s in stats) / (n - 1)
    if params.ricci_lower > observed + SECTIONAL_SLACK * (1.0 + abs(observed)):
        raise PreconditionError(
            f"Ricci lower bound {params.ricci_lower!r} exceeds the field's minimum Ric/(n−1) = {observed!r}"
        )
    return prop43_lower_bound(n, params.ricci_lower, field.total_volume), "ricci_lower_bound"


def _weyl_cross_check(stats: list[_SampleStats], verdict: Verdict, notes: list[str]) -> None:
    worst = max(s.weyl_norm for s in stats)
    if verdict is Verdict.HYPOTHESES_MET and worst > math.sqrt(1e-9):
        notes.append(get_text("notes.contradiction", detail=f"𝒲 ≡ 0 predicted but max |𝒲| = {worst!r}"))


def _field_inputs(field: CurvatureField, **extra: Any) -> dict[str, Any]:
    inputs: dict[str, Any] = {"dimension": field.dim, "samples": len(field.samples), "volume": field.total_volume}
    inputs.update(extra)
    return inputs


def _thm15(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.THM15.value
    n = field.dim
    k = _require_k(params, theorem)
    _check_k_range(k, 1, n - 1, theorem)
    coef = threshold(ThresholdKind.THM15, n, k)
    stats = _sample_stats(field, params, k=None if params.a is not None else k)
    a, notes = _ric_k_a(stats, params, k)
    vol = field.total_volume
    lhs = _lp(field.weights, np.array([s.weyl_norm for s in stats]), n / 2.0)
    thr = coef * a * vol ** (2.0 / n)
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    if k <= _ceil_half(n):
        conclusion = get_text("thm15.small_k")
    else:
        conclusion = get_text("thm15.large_k")
        notes.append(get_text("thm15.ambiguity"))
    values = {
        "lhs": lhs,
        "normalized_lhs": lhs / vol ** (2.0 / n),
        "a": a,
        "a_source": "user" if params.a is not None else "ric_k_search",
        "coefficient": coef,
    }
    inputs = _field_inputs(field, k=k, a=params.a, restarts=params.restarts, seed=params.seed)
    return _report(theorem, inputs, values, thr, margin, verdict, conclusion, notes)


def _thm16(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.THM16.value
    n = field.dim
    k = _require_k(params, theorem)
    _check_k_range(k, 1, n - 1, theorem)
    coef = threshold(ThresholdKind.THM16, n, k)
    stats = _sample_stats(field, params)
    lam, source = _resolve_yamabe(field, stats, params, theorem)
    lhs = _lp(field.weights, np.array([s.pinching for s in stats]), n / 2.0)
    thr = coef * lam
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    notes: list[str] = []
    if lam <= 0:
        notes.append("λ(g) > 0 fails")
        verdict = Verdict.NOT_MET
    key = "thm16.small_k" if k <= _ceil_half(n) else "thm16.large_k"
    values = {"lhs": lhs, "yamabe": lam, "yamabe_source": source, "coefficient": coef}
    inputs = _field_inputs(field, k=k, yamabe=params.yamabe, ricci_lower=params.ricci_lower)
    return _report(theorem, inputs, values, thr, margin, verdict, get_text(key), notes)


def _cor17(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.COR17.value
    n = field.dim
    k = _require_k(params, theorem)
    _check_k_range(k, 1, n - 1, theorem)
    coef = threshold(ThresholdKind.COR17, n, k)
    stats = _sample_stats(field, params)
    min_scalar = min(s.scalar for s in stats)
    lam, source = _resolve_yamabe(field, stats, params, theorem)
    lhs = _lp(field.weights, np.array([s.pinching for s in stats]), n / 2.0)
    thr = coef * lam
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    notes: list[str] = []
    if min_scalar <= 0:
        notes.append(f"R > 0 fails: min scalar curvature is {min_scalar!r}")
        verdict = Verdict.NOT_MET
    key = "cor17.small_k" if k <= _ceil_half(n) + 1 else "cor17.large_k"
    values = {"lhs": lhs, "yamabe": lam, "yamabe_source": source, "coefficient": coef, "min_scalar": min_scalar}
    inputs = _field_inputs(field, k=k, yamabe=params.yamabe, ricci_lower=params.ricci_lower)
    return _report(theorem, inputs, values, thr, margin, verdict, get_text(key), notes)


def _gb4(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.GB4.value
    n = field.dim
    if n != 4:
        raise DimensionError(f"{theorem} is a four-dimensional statement, got n={n}")
    thr = threshold(ThresholdKind.GB4, n)
    stats = _sample_stats(field, params)
    lhs = float(np.sum(field.weights * np.array([s.weyl_norm_sq for s in stats])))
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    ricci_min = min(s.ricci_min for s in stats)
    notes: list[str] = []
    if ricci_min <= STRICT_TOL:
        notes.append(f"Ric > 0 fails: min Ricci eigenvalue is {ricci_min!r}")
        verdict = Verdict.NOT_MET
    values = {"lhs": lhs, "ricci_min": ricci_min}
    return _report(theorem, _field_inputs(field), values, thr, margin, verdict, get_text("gb4.conclusion"), notes)


def _prop43(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.PROP43_YAMABE_LB.value
    n = field.dim
    stats = _sample_stats(field, params)
    observed = min(s.ricci_min for s in stats) / (n - 1)
    a = observed if params.ricci_lower is None else params.ricci_lower
    notes: list[str] = []
    vol = field.total_volume
    values: dict[str, Any] = {
        "a": a,
        "a_source": "ricci_min" if params.ricci_lower is None else "user",
        "observed_ricci_min_scaled": observed,
        "yamabe_upper_bound": yamabe_upper_bound(n),
    }
    if params.ricci_lower is not None and params.ricci_lower > observed + SECTIONAL_SLACK * (1.0 + abs(observed)):
        notes.append(f"Ric ≥ (n−1)a fails: min Ric/(n−1) = {observed!r}")
        verdict = Verdict.NOT_MET
        bound = n * (n - 1) * a * vol ** (2.0 / n)
    elif a <= STRICT_TOL:
        notes.append("Ric ≥ (n−1)a needs a > 0")
        verdict = strict_verdict(a, 0.0)
        bound = 0.0
    else:
        bound = prop43_lower_bound(n, a, vol)
        verdict = Verdict.HYPOTHESES_MET
        chain = prop43_chain(n, a, vol, params.yamabe)
        values["chain"] = [c.to_dict() for c in chain]
        if params.yamabe is not None and not chain[0].holds:
            notes.append(f"supplied Yamabe constant {params.yamabe!r} is below the lower bound {bound!r}")
            verdict = Verdict.NOT_MET
    values["lower_bound"] = bound
    inputs = _field_inputs(field, ricci_lower=params.ricci_lower, yamabe=params.yamabe)
    return _report(theorem, inputs, values, bound, a, verdict, get_text("prop43_yamabe_lb.conclusion"), notes)


def _require_harmonic(params: CertifyParams, theorem: str) -> list[str]:
    if not params.harmonic_weyl:
        raise UsageError(f"{theorem} needs the harmonic Weyl assertion (--assert-harmonic-weyl)")
    return [get_text("notes.harmonic_assumed")]


def _thm19_gap1(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.THM19_GAP1.value
    notes = _require_harmonic(params, theorem)
    n = field.dim
    k = _require_k(params, theorem)
    _check_k_range(k, 1, (n - 1) // 2, theorem)
    coef = threshold(ThresholdKind.THM19_1, n, k)
    stats = _sample_stats(field, params, k=None if params.a is not None else k)
    a, extra = _ric_k_a(stats, params, k)
    notes.extend(extra)
    vol = field.total_volume
    lhs = _lp(field.weights, np.array([s.weyl_norm for s in stats]), n / 2.0)
    thr = coef * a * vol ** (2.0 / n)
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    _weyl_cross_check(stats, verdict, notes)
    values = {
        "lhs": lhs,
        "normalized_lhs": lhs / vol ** (2.0 / n),
        "a": a,
        "a_source": "user" if params.a is not None else "ric_k_search",
        "coefficient": coef,
    }
    inputs = _field_inputs(field, k=k, a=params.a, harmonic_weyl=True)
    return _report(theorem, inputs, values, thr, margin, verdict, get_text("thm19_gap1.conclusion"), notes)


def _thm19_gap2(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.THM19_GAP2.value
    notes = _require_harmonic(params, theorem)
    n = field.dim
    coef = threshold(ThresholdKind.THM19_2, n)
    stats = _sample_stats(field, params)
    lam, source = _resolve_yamabe(field, stats, params, theorem)
    if lam <= 0:
        notes.append("λ(g) > 0 fails")
    lhs = _lp(field.weights, np.array([s.pinching for s in stats]), n / 2.0)
    thr = coef * lam
    margin = thr - lhs
    verdict = strict_verdict(margin, thr)
    _weyl_cross_check(stats, verdict, notes)
    values = {"lhs": lhs, "yamabe": lam, "yamabe_source": source, "coefficient": coef}
    inputs = _field_inputs(field, yamabe=params.yamabe, ricci_lower=params.ricci_lower, harmonic_weyl=True)
    return _report(theorem, inputs, values, thr, margin, verdict, get_text("thm19_gap2.conclusion"), notes)


def _cor28_field(field: CurvatureField, params: CertifyParams) -> CertificateReport:
    theorem = FieldTheorem.COR28_QUASIPOS.value
    n = field.dim
    if n < 4:
        raise DimensionError(f"{theorem} needs n >= 4, got {n}")
    stats = _sample_stats(field, params, quasi=True)
    for idx, s in enumerate(stats):
        if not s.conformally_flat:
            raise NotConformallyFlatError(f"Sample #{idx} is not conformally flat; |𝒲|² = {s.weyl_norm_sq:.3e}")
    q = np.array([s.quasi_positive for s in stats], dtype=float)
    low, high = float(np.min(q)), float(np.max(q))
    notes: list[str] = []
    if low < -STRICT_TOL:
        verdict, margin = Verdict.NOT_MET, low
    elif high > STRICT_TOL:
        verdict, margin = Verdict.HYPOTHESES_MET, high
    else:
        verdict, margin = Verdict.DEGENERATE, high
        notes.append("quantity vanishes on every sample")
    values = {"min": low, "max": high}
    conclusion = get_text("cor28_quasipos.conclusion")
    return _report(theorem, _field_inputs(field), values, 0.0, margin, verdict, conclusion, notes)


_FIELD: dict[FieldTheorem, Callable[[CurvatureField, CertifyParams], CertificateReport]] = {
    FieldTheorem.THM15: _thm15,
    FieldTheorem.THM16: _thm16,
    FieldTheorem.COR17: _cor17,
    FieldTheorem.GB4: _gb4,
    FieldTheorem.PROP43_YAMABE_LB: _prop43,
    FieldTheorem.THM19_GAP1: _thm19_gap1,
    FieldTheorem.THM19_GAP2: _thm19_gap2,
    FieldTheorem.COR28_QUASIPOS: _cor28_field,
}


def certify_field(
    field: CurvatureField,
    theorem: FieldTheorem | str,
    params: CertifyParams | None = None,
) -> CertificateReport:
    """Check an integral theorem's hypotheses on a sampled field."""
    try:
        key = FieldTheorem(theorem)
    except ValueError:
        known = ", ".join(t.value for t in FieldTheorem)
        raise UsageError(f"Unknown field theorem {theorem!r}; expected one of: {known}") from None
    if not field.samples:
        raise EmptyFieldError()
    return _FIELD[key](field, params or CertifyParams())

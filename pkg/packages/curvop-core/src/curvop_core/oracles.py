"""Seeded property suites for the eigenvalue inequalities and the Ric_k search."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .bounds import (
    bivector_dim,
    concentration_check,
    eigen_sum_subadditivity,
    ky_fan_check,
    lemma32_bound,
    lemma44_exhaustive,
    prop33_bounds,
    prop46_bound,
)
from .certify import CertifyParams, certify_pointwise
from .decompose import orthogonal_decompose
from .models import BoundCheck, EqualityCase, RangeError, Verdict
from .ricci_k import ric_k_grid_min, ric_k_min, sphere_lattice
from .spectra import curvature_operator, spectrum
from .tensors import CurvatureTensor, full_norm_sq, symmetrize_random
from .zoo import random_curvature

logger = logging.getLogger(__name__)

GRID_TOL = 1e-3
GRID_POINTS = 100_000
# Random tensors in the grid suite are scaled to this full norm.
GRID_TENSOR_NORM = 0.5
MAX_REPORTED_FAILURES = 5


@dataclass(slots=True)
class OracleSummary:
    """Pass/fail tally of a suite with the worst slack seen."""

    suite: str
    trials: int
    seed: int
    checks: int = 0
    failures: int = 0
    worst_slack: float = math.inf
    first_failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, check: BoundCheck | bool, slack: float, label: str) -> None:
        self.checks += 1
        self.worst_slack = min(self.worst_slack, float(slack))
        ok = check.holds if isinstance(check, BoundCheck) else bool(check)
        if not ok:
            self.failures += 1
            if len(self.first_failures) < MAX_REPORTED_FAILURES:
                self.first_failures.append(label)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "trials": self.trials,
            "seed": self.seed,
            "checks": self.checks,
            "failures": self.failures,
            "worst_slack": self.worst_slack if self.checks else None,
            "first_failures": list(self.first_failures),
            "details": dict(self.details),
        }


def _random_symmetric(rng: np.random.Generator, size: int) -> np.ndarray:
    raw = rng.standard_normal((size, size))
    return 0.5 * (raw + raw.T)


def run_lemma32(trials: int, seed: int) -> OracleSummary:
    """Zero-sum lowest-k bound, its two equality families and perturbed near-equality cases."""
    summary = OracleSummary("lemma32", trials, seed)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        size = int(rng.integers(2, 67))
        k = int(rng.integers(1, size + 1))
        seq = rng.standard_normal(size) * rng.uniform(0.1, 10.0)
        seq -= seq.mean()
        check = lemma32_bound(seq, k)
        label = f"trial {t}: N={size}, k={k}, slack={check.slack!r}"
        summary.record(check, check.slack / (1.0 + abs(check.rhs)), label)

    near_trials = max(1, min(1000, trials // 100))
    detected = rejected = 0
    for t in range(near_trials):
        size = int(rng.integers(3, 67))
        k = int(rng.integers(1, size))
        c = float(rng.uniform(0.1, 2.0))
        two_level = np.concatenate([np.full(k, -(size - k) * c), np.full(size - k, k * c)])
        check = lemma32_bound(two_level, k)
        found = check.equality_case is EqualityCase.TWO_LEVEL and abs(check.slack) <= 1e-9 * (1.0 + abs(check.rhs))
        detected += found
        summary.record(found, 0.0, f"equality trial {t}: two-level sequence not detected (N={size}, k={k})")

        delta = rng.standard_normal(size)
        delta -= delta.mean()
        perturbed = two_level + 1e-3 * c * delta / np.linalg.norm(delta)
        perturbed -= perturbed.mean()
        near = lemma32_bound(perturbed, k)
        ok = near.equality_case is None and near.holds
        rejected += ok
        summary.record(ok, 0.0, f"near-equality trial {t}: perturbed sequence misclassified (N={size}, k={k})")

    zero = lemma32_bound(np.zeros(5), 2)
    summary.record(zero.equality_case is EqualityCase.ALL_ZERO, 0.0, "all-zero sequence not detected")
    summary.details.update(two_level_detected=detected, near_equality_rejected=rejected, near_trials=near_trials)
    return summary


def run_lemma31(trials: int, seed: int) -> OracleSummary:
    """Lower-sum superadditivity and upper-sum subadditivity on random symmetric pairs."""
    summary = OracleSummary("lemma31", trials, seed)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        size = int(rng.integers(1, 13))
        k = int(rng.integers(1, size + 1))
        a = _random_symmetric(rng, size)
        b = _random_symmetric(rng, size)
        lower, upper = eigen_sum_subadditivity(a, b, k)
        for name, check in (("lower", lower), ("upper", upper)):
            summary.record(check, check.slack, f"trial {t} ({name}): N={size}, k={k}, slack={check.slack!r}")
    return summary


def run_kyfan(trials: int, seed: int, frames: int = 64) -> OracleSummary:
    """Extremal eigen-sums against random orthonormal k-frames."""
    summary = OracleSummary("kyfan", trials, seed)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        size = int(rng.integers(1, 13))
        k = int(rng.integers(1, size + 1))
        a = _random_symmetric(rng, size)
        frame_seed = int(rng.integers(0, 2**31))
        for largest in (True, False):
            check = ky_fan_check(a, k, frames, frame_seed, largest=largest)
            kind = "max" if largest else "min"
            summary.record(check, check.slack, f"trial {t} ({kind}): N={size}, k={k}, slack={check.slack!r}")
    return summary


def run_concentration(trials: int, seed: int) -> OracleSummary:
    summary = OracleSummary("concentration", trials, seed)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        size = int(rng.integers(1, 13))
        for idx, check in enumerate(concentration_check(_random_symmetric(rng, size))):
            summary.record(check, check.slack, f"trial {t}: N={size}, eigenvalue {idx}, slack={check.slack!r}")
    return summary


def run_lemma44(trials: int, seed: int) -> OracleSummary:
    """Exhaustive over 8 ≤ n ≤ 64; trials and seed are ignored."""
    summary = OracleSummary("lemma44", trials, seed)
    for n, p, check in lemma44_exhaustive(8, 64):
        summary.record(check, check.slack, f"n={n}, p={p}")
    summary.details.update(n_min=8, n_max=64)
    return summary


def _scaled_random(seed: int, n: int, norm: float) -> CurvatureTensor:
    rm = symmetrize_random(seed, n)
    return (norm / math.sqrt(full_norm_sq(rm))) * rm


def run_rick_grid(
    trials: int,
    seed: int,
    *,
    grid_points: int = GRID_POINTS,
    restarts: int = 64,
    threads: int = 1,
) -> OracleSummary:
    """Multi-start Ric_k against a dense spherical grid for n ∈ {3, 4}, every k."""
    summary = OracleSummary("rick-grid", trials, seed)
    grids = {n: sphere_lattice(n, grid_points, seed) for n in (3, 4)}
    worst_gap = 0.0
    for t in range(trials):
        n = 3 + t % 2
        rm = _scaled_random(seed + t, n, GRID_TENSOR_NORM)
        for k in range(1, n):
            found = ric_k_min(rm, k, restarts, seed + t, threads=threads)
            grid_value, _ = ric_k_grid_min(rm, k, grids[n])
            gap = abs(found.value - grid_value)
            worst_gap = max(worst_gap, gap)
            summary.record(gap <= GRID_TOL, GRID_TOL - gap, f"trial {t}: n={n}, k={k}, gap={gap!r}")
        logger.debug("rick-grid trial %d done", t)
    summary.details.update(grid_points=grid_points, tolerance=GRID_TOL, worst_gap=worst_gap)
    return summary


def run_sandwich(trials: int, seed: int, *, restarts: int = 16, threads: int = 1) -> OracleSummary:
    """Eigen-sum sandwich: the Ricci/Weyl lower bound and the sectional-curvature pair, every k."""
    summary = OracleSummary("sandwich", trials, seed)
    for t in range(trials):
        n = 4 + t % 3
        rm = symmetrize_random(seed + t, n)
        d = orthogonal_decompose(rm)
        spec = spectrum(curvature_operator(rm))
        low = ric_k_min(rm, 1, restarts, seed + t, threads=threads).value
        high = -ric_k_min(-rm, 1, restarts, seed + t, threads=threads).value
        for k in range(1, bivector_dim(n) + 1):
            sums = spec.lower_sum(k)
            bound46 = prop46_bound(d.scalar, d.traceless_ricci_norm, d.weyl_norm, n, k)
            lower33, _ = prop33_bounds(low, d.weyl_norm, n, k)
            _, upper33 = prop33_bounds(high, d.weyl_norm, n, k)
            for name, check in (
                ("ricci-weyl", BoundCheck.evaluate(sums, bound46)),
                ("sectional-lower", BoundCheck.evaluate(sums, lower33)),
                ("sectional-upper", BoundCheck.evaluate(upper33, spec.upper_sum(k))),
            ):
                summary.record(check, check.slack, f"trial {t} ({name}): n={n}, k={k}, slack={check.slack!r}")
    return summary


def run_cor34_soundness(trials: int, seed: int, *, restarts: int = 16, threads: int = 1) -> OracleSummary:
    """Every cor34 certificate with hypotheses met must come with a k-positive spectrum."""
    summary = OracleSummary("cor34-soundness", trials, seed)
    rng = np.random.default_rng(seed)
    met = 0
    for t in range(trials):
        n = 4 + t % 3
        big_n = bivector_dim(n)
        k = 1 + t % (big_n - 1)
        weyl_scale = float(rng.uniform(0.0, 1.5))
        ricci_scale = float(rng.uniform(0.0, 1.0))
        rm = random_curvature(n, seed + t, weyl_scale=weyl_scale, ricci_scale=ricci_scale, scalar=float(n * (n - 1)))
        params = CertifyParams(k=k, restarts=restarts, seed=seed + t, threads=threads)
        report = certify_pointwise(rm, "cor34", params)
        if report.verdict is not Verdict.HYPOTHESES_MET:
            continue
        met += 1
        eigen_sum = float(report.hypothesis_values["eigen_sum"])
        summary.record(eigen_sum > 0, eigen_sum, f"trial {t}: n={n}, k={k}, eigen_sum={eigen_sum!r}")
    summary.details.update(hypotheses_met=met)
    return summary


SUITES: dict[str, Callable[[int, int], OracleSummary]] = {
    "lemma32": run_lemma32,
    "lemma31": run_lemma31,
    "kyfan": run_kyfan,
    "concentration": run_concentration,
    "lemma44": run_lemma44,
    "rick-grid": run_rick_grid,
    "sandwich": run_sandwich,
    "cor34-soundness": run_cor34_soundness,
}


def run_suite(name: str, trials: int, seed: int, **kwargs: Any) -> OracleSummary:
    if trials < 1:
        raise RangeError(f"trials must be >= 1, got {trials}")
    try:
        runner = SUITES[name]
    except KeyError:
        raise RangeError(f"Unknown oracle suite {name!r}; expected one of: {', '.join(SUITES)}") from None
    logger.info("Running %s with %d trials (seed %d)", name, trials, seed)
    summary = runner(trials, seed, **kwargs)
    logger.info(
        "%s: %d checks, %d failures, worst slack %.3e", name, summary.checks, summary.failures, summary.worst_slack
    )
    return summary

from __future__ import annotations

import numpy as np
import pytest
from curvop_core import (
    DimensionError,
    Frame,
    NotConformallyFlatError,
    Positivity,
    RangeError,
    SpectralSummary,
    ValidationError,
    bivector_index,
    curvature_operator,
    is_conformally_flat,
    k_positivity,
    orthogonal_decompose,
    pair_eigenvalues,
    quasi_positive_quantity,
    random_curvature,
    schouten_operator,
    sectional_range,
    space_form,
    spectrum,
    symmetric_spectrum,
    theorem12_blocks,
    traceless_ricci_operator,
)


def test_bivector_labels_and_flat_index():
    index = bivector_index(4)
    assert index.size == 6
    assert index.labels() == ["01", "02", "03", "12", "13", "23"]
    assert index.flat(1, 3) == 4
    with pytest.raises(RangeError):
        index.flat(3, 1)
    assert bivector_index(11).labels()[-1] == "9-10"
    with pytest.raises(DimensionError):
        bivector_index(1)


def test_sphere_operator_is_identity(sphere4):
    op = curvature_operator(sphere4)
    np.testing.assert_allclose(op.entries, np.eye(6), atol=1e-12)
    np.testing.assert_allclose(spectrum(op).eigenvalues, np.ones(6), atol=1e-12)


def test_s2xs2_spectrum_and_positivity(s2xs2):
    s = spectrum(curvature_operator(s2xs2))
    np.testing.assert_allclose(s.eigenvalues, [0, 0, 0, 0, 1, 1], atol=1e-12)
    np.testing.assert_allclose(s.prefix_sums, [0, 0, 0, 0, 1, 2], atol=1e-12)
    assert s.lower_sum(4) == pytest.approx(0.0, abs=1e-12)
    assert s.upper_sum(2) == pytest.approx(2.0)
    assert k_positivity(s, 4).verdict is Positivity.NONNEG
    assert k_positivity(s, 5).verdict is Positivity.POSITIVE
    assert k_positivity(s, 5).margin == pytest.approx(1.0)


def test_hyperbolic_is_indefinite():
    s = spectrum(curvature_operator(space_form(4, -1.0)))
    verdict = k_positivity(s, 1)
    assert verdict.verdict is Positivity.INDEFINITE
    assert verdict.margin == pytest.approx(-1.0)


def test_summary_rejects_bad_input():
    with pytest.raises(ValidationError):
        SpectralSummary.from_eigenvalues(np.array([1.0, 0.0]))
    s = symmetric_spectrum(np.diag([2.0, 1.0]))
    with pytest.raises(RangeError):
        s.lower_sum(0)
    with pytest.raises(RangeError):
        s.upper_sum(3)


def test_spectrum_is_frame_independent(random5):
    rng = np.random.default_rng(8)
    q, _ = np.linalg.qr(rng.standard_normal((5, 5)))
    base = spectrum(curvature_operator(random5)).eigenvalues
    rotated = spectrum(curvature_operator(random5, Frame(q))).eigenvalues
    np.testing.assert_allclose(rotated, base, atol=1e-10)


def test_block_decomposition_of_s2xs2(s2xs2):
    blocks = theorem12_blocks(s2xs2)
    np.testing.assert_allclose(blocks.ricci_eigenvalues, np.ones(4), atol=1e-12)
    np.testing.assert_allclose(np.diag(blocks.schouten_block.entries), np.full(6, 1.0 / 3.0), atol=1e-12)
    np.testing.assert_allclose(np.diag(blocks.weyl_block.entries), [2 / 3, -1 / 3, -1 / 3, -1 / 3, -1 / 3, 2 / 3])
    assert blocks.weyl_block.trace() == pytest.approx(0.0, abs=1e-12)
    assert blocks.weyl_block.frobenius_sq() == pytest.approx(4.0 / 3.0)
    np.testing.assert_allclose(blocks.operator.entries, curvature_operator(s2xs2).entries, atol=1e-12)


@pytest.mark.parametrize("seed", [3, 4, 5])
def test_block_decomposition_reconstructs_operator(seed):
    rm = random_curvature(5, seed, weyl_scale=0.8, ricci_scale=1.1, scalar=-3.0)
    blocks = theorem12_blocks(rm)
    direct = curvature_operator(rm, blocks.frame)
    np.testing.assert_allclose(blocks.operator.entries, direct.entries, atol=1e-10)
    # Weyl block carries |𝒲|²/4 and no trace.
    d = orthogonal_decompose(rm)
    assert blocks.weyl_block.frobenius_sq() == pytest.approx(d.weyl_norm**2 / 4.0)
    assert blocks.weyl_block.trace() == pytest.approx(0.0, abs=1e-10)


def test_pair_eigenvalues_and_schouten_operator(s1xs3):
    lam = [0.0, 2.0, 2.0, 2.0]
    np.testing.assert_allclose(pair_eigenvalues(np.array(lam), 6.0), [0, 0, 0, 1, 1, 1], atol=1e-12)
    np.testing.assert_allclose(np.diag(schouten_operator(s1xs3).entries), [0, 0, 0, 1, 1, 1], atol=1e-12)
    with pytest.raises(DimensionError):
        pair_eigenvalues(np.array([1.0, 1.0]), 2.0)


def test_traceless_ricci_operator_vanishes_on_einstein(s2xs2):
    op = traceless_ricci_operator(orthogonal_decompose(s2xs2))
    np.testing.assert_allclose(op.entries, np.zeros((6, 6)), atol=1e-12)


def test_sectional_range_needs_conformal_flatness(s1xs3, s2xs2):
    d = orthogonal_decompose(s1xs3)
    assert is_conformally_flat(d)
    s = spectrum(curvature_operator(s1xs3))
    low, high = sectional_range(s, d.weyl_norm**2, 12.0)
    assert low == pytest.approx(0.0, abs=1e-12)
    assert high == pytest.approx(1.0)

    d2 = orthogonal_decompose(s2xs2)
    assert not is_conformally_flat(d2)
    with pytest.raises(NotConformallyFlatError):
        sectional_range(spectrum(curvature_operator(s2xs2)), d2.weyl_norm**2, 8.0)


def test_quasi_positive_quantity():
    assert quasi_positive_quantity([3.0, 3.0, 3.0, 3.0], 12.0, 4) == pytest.approx(0.0)
    assert quasi_positive_quantity([4.0] * 5, 20.0, 5) == pytest.approx(8.0 / 3.0)
    with pytest.raises(DimensionError):
        quasi_positive_quantity([1.0, 1.0], 2.0, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
@pytest.mark.parametrize("c", [1.0, -0.5, 2.0])
def test_space_form_spectrum_is_constant(n, c):
    rm = space_form(n, c)
    eigenvalues = spectrum(curvature_operator(rm)).eigenvalues
    np.testing.assert_allclose(eigenvalues, np.full(n * (n - 1) // 2, c), atol=1e-10)
    d = orthogonal_decompose(rm)
    assert d.weyl_norm < 1e-12
    assert d.scalar == pytest.approx(c * n * (n - 1), abs=1e-10)

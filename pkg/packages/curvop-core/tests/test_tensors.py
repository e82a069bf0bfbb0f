from __future__ import annotations

import numpy as np
import pytest
from curvop_core import (
    CurvatureTensor,
    DimensionError,
    Frame,
    FrameError,
    SymTwoTensor,
    ValidationError,
    full_norm_sq,
    kulkarni_nomizu,
    metric,
    ricci_contract,
    scalar_curvature,
    symmetrize_random,
)
from curvop_core.tensors import bianchi_cyclic_sum


def test_kulkarni_nomizu_of_metric():
    g = metric(4)
    gg = kulkarni_nomizu(g, g)
    assert gg.component(0, 1, 0, 1) == pytest.approx(2.0)
    assert gg.component(0, 1, 2, 3) == 0.0
    assert full_norm_sq(gg) == pytest.approx(96.0)


def test_kulkarni_nomizu_is_symmetric_in_its_arguments():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 5))
    b = rng.standard_normal((5, 5))
    s = SymTwoTensor(a + a.T)
    t = SymTwoTensor(b + b.T)
    np.testing.assert_array_equal(kulkarni_nomizu(s, t).entries, kulkarni_nomizu(t, s).entries)
    assert kulkarni_nomizu(s, t).bianchi_residual() < 1e-12


def test_kulkarni_nomizu_dimension_mismatch():
    with pytest.raises(DimensionError):
        kulkarni_nomizu(metric(3), metric(4))


def test_norms_and_contractions(sphere4, s2xs2):
    assert full_norm_sq(metric(4)) == pytest.approx(4.0)
    assert full_norm_sq(sphere4) == pytest.approx(24.0)
    assert full_norm_sq(CurvatureTensor.zeros(4)) == 0.0
    np.testing.assert_allclose(ricci_contract(sphere4).entries, 3.0 * np.eye(4), atol=1e-12)
    np.testing.assert_allclose(ricci_contract(s2xs2).entries, np.eye(4), atol=1e-12)
    assert scalar_curvature(sphere4) == pytest.approx(12.0)
    assert scalar_curvature(s2xs2) == pytest.approx(4.0)
    assert scalar_curvature(CurvatureTensor.zeros(5)) == 0.0


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_symmetrize_random_is_valid_and_deterministic(n):
    first = symmetrize_random(11, n)
    second = symmetrize_random(11, n)
    np.testing.assert_array_equal(first.entries, second.entries)
    first.validate(tol=1e-12)
    assert np.max(np.abs(bianchi_cyclic_sum(first.entries))) < 1e-12


def test_from_array_rejects_broken_symmetry():
    arr = np.zeros((3, 3, 3, 3))
    arr[0, 1, 0, 1] = 1.0
    with pytest.raises(ValidationError):
        CurvatureTensor(arr)


def test_from_array_rejects_bianchi_violation():
    arr = np.zeros((4, 4, 4, 4))
    for a, b, c, d, v in ((0, 1, 2, 3, 1.0), (1, 0, 2, 3, -1.0), (0, 1, 3, 2, -1.0), (1, 0, 3, 2, 1.0)):
        arr[a, b, c, d] = v
        arr[c, d, a, b] = v
    with pytest.raises(ValidationError, match="Bianchi"):
        CurvatureTensor.from_array(arr)
    # Same array is accepted when the check is skipped.
    CurvatureTensor.from_array(arr, check_bianchi=False)


def test_from_components_expands_symmetries():
    rm = CurvatureTensor.from_components(3, [[0, 1, 0, 1, 1.0], [0, 2, 0, 2, 1.0], [1, 2, 1, 2, 1.0]])
    assert rm.component(1, 0, 1, 0) == 1.0
    assert rm.component(1, 0, 0, 1) == -1.0
    assert rm.representatives() == [(0, 1, 0, 1, 1.0), (0, 2, 0, 2, 1.0), (1, 2, 1, 2, 1.0)]


@pytest.mark.parametrize(
    ("entry", "message"),
    [
        ([0, 1, 0, 5, 1.0], "out of range"),
        ([1, 0, 0, 1, 1.0], "not a representative"),
        ([0, 2, 0, 1, 1.0], "not a representative"),
        ([0, 1, 0, 1], "must be"),
    ],
)
def test_from_components_names_bad_entry(entry, message):
    with pytest.raises(ValidationError, match=message) as excinfo:
        CurvatureTensor.from_components(4, [[0, 1, 0, 1, 1.0], entry])
    assert "Entry #1" in str(excinfo.value)


def test_from_components_rejects_duplicates():
    with pytest.raises(ValidationError, match="duplicate of entry #0"):
        CurvatureTensor.from_components(4, [[0, 1, 0, 1, 1.0], [0, 1, 0, 1, 2.0]])


def test_representatives_round_trip(random5):
    rebuilt = CurvatureTensor.from_components(5, random5.representatives())
    np.testing.assert_allclose(rebuilt.entries, random5.entries, atol=0.0)


def test_frame_validation():
    with pytest.raises(FrameError):
        Frame(np.array([[1.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(DimensionError):
        Frame(np.ones((2, 3)))


def test_change_of_frame_preserves_norm(random5):
    rng = np.random.default_rng(5)
    q, _ = np.linalg.qr(rng.standard_normal((5, 5)))
    rotated = random5.in_frame(Frame(q))
    assert full_norm_sq(rotated) == pytest.approx(full_norm_sq(random5), rel=1e-12)
    assert scalar_curvature(rotated) == pytest.approx(scalar_curvature(random5), abs=1e-10)


def test_symmetric_two_tensor_validation():
    with pytest.raises(ValidationError):
        SymTwoTensor(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(DimensionError):
        SymTwoTensor(np.ones((1, 1)))

from __future__ import annotations

import numpy as np
import pytest
from curvop_core import (
    DimensionError,
    PreconditionError,
    RangeError,
    directional_operator,
    full_norm_sq,
    orthonormal_complement,
    random_curvature,
    ric_k_at,
    ric_k_grid_min,
    ric_k_min,
    sectional_bounds,
    space_form,
    sphere_lattice,
)

E0 = np.array([1.0, 0.0, 0.0, 0.0])


def test_orthonormal_complement():
    u = np.array([0.6, 0.0, 0.8])
    basis = orthonormal_complement(u)
    assert basis.shape == (2, 3)
    np.testing.assert_allclose(basis @ basis.T, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(basis @ u, np.zeros(2), atol=1e-12)


def test_directional_operator_on_s2xs2(s2xs2):
    np.testing.assert_allclose(directional_operator(s2xs2, E0), np.diag([1.0, 0.0, 0.0]), atol=1e-12)
    assert ric_k_at(s2xs2, E0, 1) == pytest.approx(0.0, abs=1e-12)
    assert ric_k_at(s2xs2, E0, 2) == pytest.approx(0.0, abs=1e-12)
    assert ric_k_at(s2xs2, E0, 3) == pytest.approx(1.0)


def test_direction_must_be_unit(s2xs2):
    with pytest.raises(PreconditionError):
        directional_operator(s2xs2, [2.0, 0.0, 0.0, 0.0])
    with pytest.raises(DimensionError):
        directional_operator(s2xs2, [1.0, 0.0, 0.0])
    with pytest.raises(RangeError):
        ric_k_at(s2xs2, E0, 4)


@pytest.mark.parametrize(("c", "k"), [(1.0, 1), (1.0, 3), (-1.0, 2), (0.5, 4)])
def test_space_form_ric_k(c, k):
    result = ric_k_min(space_form(5, c), k, restarts=4, seed=1)
    assert result.value == pytest.approx(k * c, abs=1e-9)
    assert result.converged
    assert result.restarts_used == 4


def test_s2xs2_ric_k(s2xs2):
    assert ric_k_min(s2xs2, 1, restarts=8, seed=2).value == pytest.approx(0.0, abs=1e-6)
    assert ric_k_min(s2xs2, 2, restarts=8, seed=2).value == pytest.approx(0.0, abs=1e-6)
    # Ric_{n-1} is the Ricci curvature, which is 1 in every direction.
    assert ric_k_min(s2xs2, 3, restarts=8, seed=2).value == pytest.approx(1.0, abs=1e-9)


def test_sectional_bounds(s2xs2):
    low, high = sectional_bounds(s2xs2, restarts=8, seed=3)
    assert low.value == pytest.approx(0.0, abs=1e-6)
    assert high.value == pytest.approx(1.0, abs=1e-6)


def test_search_is_reproducible_across_threads(random5):
    serial = ric_k_min(random5, 2, restarts=6, seed=9)
    threaded = ric_k_min(random5, 2, restarts=6, seed=9, threads=3)
    assert serial.value == threaded.value
    np.testing.assert_array_equal(serial.argmin_direction, threaded.argmin_direction)
    assert ric_k_at(random5, serial.argmin_direction, 2) == pytest.approx(serial.value, abs=1e-9)


def test_search_rejects_bad_arguments(random5):
    with pytest.raises(RangeError):
        ric_k_min(random5, 0)
    with pytest.raises(RangeError):
        ric_k_min(random5, 5)
    with pytest.raises(RangeError):
        ric_k_min(random5, 1, restarts=0)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_sphere_lattice_is_unit(n):
    points = sphere_lattice(n, 500, seed=1)
    assert points.shape == (500, n)
    np.testing.assert_allclose(np.linalg.norm(points, axis=1), np.ones(500), atol=1e-12)


def test_sphere_lattice_rejects_bad_arguments():
    with pytest.raises(RangeError):
        sphere_lattice(1, 10)
    with pytest.raises(RangeError):
        sphere_lattice(3, 0)


@pytest.mark.parametrize("seed", [21, 22])
def test_search_agrees_with_grid(seed):
    rm = random_curvature(4, seed, weyl_scale=1.0, ricci_scale=1.0, scalar=1.0)
    rm = (0.5 / full_norm_sq(rm) ** 0.5) * rm
    points = sphere_lattice(4, 50_000)
    for k in (1, 2, 3):
        found = ric_k_min(rm, k, restarts=16, seed=seed)
        grid, direction = ric_k_grid_min(rm, k, points)
        assert found.value <= grid + 1e-6
        assert grid - found.value < 0.1
        assert np.linalg.norm(direction) == pytest.approx(1.0)

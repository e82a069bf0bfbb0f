from __future__ import annotations

import numpy as np
import pytest
from curvop_core import (
    DimensionError,
    ModelKind,
    ModelSpec,
    UsageError,
    ValidationError,
    build_model,
    curvature_operator,
    full_norm_sq,
    load_model_table,
    named_model,
    named_spec,
    orthogonal_decompose,
    product,
    random_curvature,
    spectrum,
)

MODEL_NAMES = load_model_table().order


def test_table_lists_every_model():
    table = load_model_table()
    assert MODEL_NAMES[0] == "sphere3"
    assert set(MODEL_NAMES) == set(table.models)
    assert table.get("nope") is None


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_named_model_matches_known_values(name):
    record = load_model_table().get(name)
    rm = named_model(name)
    d = orthogonal_decompose(rm)
    assert rm.dim == record.dim
    assert d.scalar == pytest.approx(record.scalar, abs=1e-12)
    assert full_norm_sq(d.weyl) == pytest.approx(record.weyl_norm_sq, abs=1e-12)
    np.testing.assert_allclose(np.linalg.eigvalsh(d.ricci.entries), record.ricci, atol=1e-12)
    np.testing.assert_allclose(spectrum(curvature_operator(rm)).eigenvalues, record.spectrum, atol=1e-12)


def test_unknown_name():
    with pytest.raises(UsageError, match="known models: sphere3"):
        named_spec("torus")


def test_product_blocks():
    rm = product([(2, 1.0), (2, -1.0)])
    assert rm.component(0, 1, 0, 1) == 1.0
    assert rm.component(2, 3, 2, 3) == -1.0
    assert rm.component(0, 2, 0, 2) == 0.0
    with pytest.raises(DimensionError):
        product([(1, 0.0), (1, 0.0)])
    with pytest.raises(DimensionError):
        product([(0, 1.0), (3, 1.0)])
    with pytest.raises(DimensionError):
        product([])


def test_random_curvature_is_seeded():
    first = random_curvature(5, 3)
    np.testing.assert_array_equal(first.entries, random_curvature(5, 3).entries)
    assert not np.array_equal(first.entries, random_curvature(5, 4).entries)
    first.validate()


def test_random_curvature_dimension_three():
    with pytest.raises(DimensionError):
        random_curvature(3, 0)
    rm = random_curvature(3, 0, weyl_scale=0.0, scalar=6.0)
    assert orthogonal_decompose(rm).scalar == pytest.approx(6.0)


def test_spec_round_trip():
    spec = ModelSpec(kind=ModelKind.RANDOM, dim=5, seed=7, weyl_scale=0.5, ricci_scale=2.0, scalar=1.0)
    again = ModelSpec.from_dict(spec.to_dict())
    assert again == spec
    np.testing.assert_array_equal(build_model(again).entries, build_model(spec).entries)


def test_spec_from_dict():
    spec = ModelSpec.from_dict({"kind": "space_form", "dimension": 4, "curvature": -1.0})
    assert spec.total_dim == 4
    assert build_model(spec).component(0, 1, 0, 1) == -1.0
    assert ModelSpec.from_dict({"name": "s2xs2"}).factors == ((2, 1.0), (2, 1.0))
    raw = ModelSpec.from_dict({"kind": "raw", "dimension": 3, "riemann": [[0, 1, 0, 1, 1.0]]})
    assert build_model(raw).component(1, 0, 1, 0) == 1.0


@pytest.mark.parametrize(
    "data",
    [
        {"dimension": 4},
        {"kind": "torus", "dimension": 4},
        {"kind": "space_form", "dimension": "four"},
        {"kind": "space_form", "dimension": 4.5},
        {"kind": "random", "dimension": 4, "seed": 1.5},
        {"kind": "raw", "dimension": 3, "riemann": [[0, 1.5, 0, 1, 1.0]]},
        {"kind": "raw", "dimension": 3, "riemann": [[0, 1, 0, 1]]},
        {"name": "torus"},
    ],
)
def test_spec_from_dict_rejects(data):
    with pytest.raises(ValidationError):
        ModelSpec.from_dict(data)


def test_spec_needs_dimension():
    with pytest.raises(ValidationError):
        build_model(ModelSpec(kind=ModelKind.SPACE_FORM, curvature=1.0))

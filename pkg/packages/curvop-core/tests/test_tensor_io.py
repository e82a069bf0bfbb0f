from __future__ import annotations

import json

import numpy as np
import pytest
from curvop_core import (
    CurvatureField,
    DimensionError,
    TensorFileError,
    field_from_dict,
    field_to_dict,
    load_field,
    load_tensor,
    tensor_from_dict,
    tensor_to_dict,
)
from curvop_core.tensor_io import is_field_file

BIANCHI_BREAKER = [[0, 1, 2, 3, 1.0]]


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
    return path


def test_tensor_file_round_trip(tmp_path, random5):
    path = _write(tmp_path, "t.json", tensor_to_dict(random5))
    loaded = load_tensor(path)
    np.testing.assert_array_equal(loaded.entries, random5.entries)
    assert not is_field_file(path)


def test_model_object(tmp_path, s2xs2):
    path = _write(tmp_path, "m.json", {"model": {"name": "s2xs2"}})
    np.testing.assert_array_equal(load_tensor(path).entries, s2xs2.entries)
    path = _write(tmp_path, "p.json", {"model": {"kind": "product", "factors": [[2, 1.0], [2, 1.0]]}})
    np.testing.assert_array_equal(load_tensor(path).entries, s2xs2.entries)


@pytest.mark.parametrize(
    ("data", "message"),
    [
        ({"dimension": 4, "riemann": [[0, 1, 0, 5, 1.0]]}, "Entry #0"),
        ({"dimension": 4, "riemann": [[0, 1, 0, 1]]}, "entry #0"),
        ({"dimension": 4, "riemann": [[0, 1, 0, 1.5, 1.0]]}, "indices must be integers"),
        ({"dimension": 4, "riemann": [[0, 1, 0, 1, "x"]]}, "value must be a number"),
        ({"dimension": True, "riemann": []}, "'dimension' must be an integer"),
        ({"dimension": 1, "riemann": []}, "must be >= 2"),
        ({"dimension": 4}, "needs 'riemann' or 'model'"),
        ({"dimension": 4, "riemann": BIANCHI_BREAKER}, "Bianchi"),
        ({"model": {"kind": "torus"}}, "Unknown model kind"),
        ({"model": {"name": "torus"}}, "Unknown model 'torus'"),
        ({"model": {"kind": "raw", "dimension": 3, "riemann": [[0, 1.5, 0, 1, 1.0]]}}, "index must be an integer"),
        ([1, 2, 3], "expected a JSON object"),
    ],
)
def test_malformed_tensor_files(tmp_path, data, message):
    path = _write(tmp_path, "bad.json", data)
    with pytest.raises(TensorFileError, match=message):
        load_tensor(path)


def test_bianchi_check_can_be_skipped():
    tensor = tensor_from_dict({"dimension": 4, "riemann": BIANCHI_BREAKER}, check_bianchi=False)
    assert tensor.component(2, 3, 0, 1) == 1.0


def test_missing_and_invalid_files(tmp_path):
    with pytest.raises(TensorFileError, match="file not found"):
        load_tensor(tmp_path / "nope.json")
    with pytest.raises(TensorFileError, match="invalid JSON"):
        load_tensor(_write(tmp_path, "broken.json", "{"))


def test_field_round_trip(tmp_path, sphere4, s2xs2):
    field = CurvatureField.from_pairs([(0.5, sphere4), (1.5, s2xs2)])
    path = _write(tmp_path, "f.json", field_to_dict(field))
    assert is_field_file(path)
    loaded = load_field(path)
    assert loaded.total_volume == pytest.approx(2.0)
    np.testing.assert_array_equal(loaded.samples[1].tensor.entries, s2xs2.entries)
    with pytest.raises(TensorFileError, match="field file"):
        load_tensor(path)


def test_single_tensor_as_field(tmp_path, sphere4):
    field = load_field(_write(tmp_path, "t.json", tensor_to_dict(sphere4)))
    assert len(field.samples) == 1
    assert field.total_volume == 1.0


def test_field_samples_may_use_models():
    field = field_from_dict({"samples": [{"weight": 2, "model": {"name": "sphere4"}}]})
    assert field.dim == 4
    assert field.total_volume == 2.0


@pytest.mark.parametrize(
    ("data", "error", "message"),
    [
        ({"samples": [{"weight": 0, "model": {"name": "sphere4"}}]}, TensorFileError, "positive number"),
        ({"samples": [{"model": {"name": "sphere4"}}]}, TensorFileError, "positive number"),
        ({"samples": "nope"}, TensorFileError, "'samples' list"),
        ({"samples": [3]}, TensorFileError, "sample #0: expected an object"),
        ({"dimension": 5, "samples": [{"weight": 1, "model": {"name": "sphere4"}}]}, DimensionError, "does not match"),
        (
            {"samples": [{"weight": 1, "model": {"name": "sphere4"}}, {"weight": 1, "model": {"name": "sphere5"}}]},
            DimensionError,
            "mixed dimensions",
        ),
    ],
)
def test_malformed_field_files(data, error, message):
    with pytest.raises(error, match=message):
        field_from_dict(data)

"""Shared fixtures: model tensors and seeded random tensors."""

from __future__ import annotations

import pytest
from curvop_core import CurvatureTensor, product, space_form, symmetrize_random


@pytest.fixture
def sphere4() -> CurvatureTensor:
    return space_form(4, 1.0)


@pytest.fixture
def sphere5() -> CurvatureTensor:
    return space_form(5, 1.0)


@pytest.fixture
def s2xs2() -> CurvatureTensor:
    return product([(2, 1.0), (2, 1.0)])


@pytest.fixture
def s1xs3() -> CurvatureTensor:
    return product([(1, 0.0), (3, 1.0)])


@pytest.fixture
def random5() -> CurvatureTensor:
    return symmetrize_random(7, 5)

from __future__ import annotations

import logging

from curvop_core import available_theorems, get_text
from curvop_core.certify import FieldTheorem, PointwiseTheorem


def test_every_theorem_has_a_hypothesis():
    known = set(available_theorems())
    for theorem in [*PointwiseTheorem, *FieldTheorem]:
        assert theorem.value in known
        assert get_text(f"{theorem.value}.hypothesis") != f"{theorem.value}.hypothesis"


def test_placeholders_are_filled():
    assert get_text("cor34.small_k", k=2).startswith("the curvature operator is 2-positive")


def test_unknown_key_comes_back_unchanged():
    assert get_text("nope.conclusion") == "nope.conclusion"
    assert get_text("gb4.nope") == "gb4.nope"


def test_missing_placeholder_is_logged(caplog):
    with caplog.at_level(logging.WARNING, logger="curvop_core.conclusions"):
        text = get_text("cor34.small_k", detail="x")
    assert "{k}" in text
    assert "cor34.small_k" in caplog.text

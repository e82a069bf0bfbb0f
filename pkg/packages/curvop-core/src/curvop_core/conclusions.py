"""Theorem hypothesis and conclusion texts."""

from __future__ import annotations

import logging
from functools import lru_cache
from importlib import resources
from typing import Any

import toml

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1)
def _load_texts() -> dict[str, dict[str, str]]:
    path = resources.files("curvop_core.data").joinpath("conclusions.toml")
    return toml.loads(path.read_text(encoding="utf-8"))


def available_theorems() -> list[str]:
    return sorted(key for key in _load_texts() if key != "notes")


def get_text(key: str, **kwargs: Any) -> str:
    """Text by dotted key, e.g. ``cor34.small_k``.

    Unknown keys come back unchanged; placeholders are filled with str.format.
    """
    section, _, field = key.partition(".")
    text = _load_texts().get(section, {}).get(field)
    if text is None:
        logger.debug("No conclusion text for %s", key)
        text = key
    if kwargs:
        try:
            text = text.format(**kwargs)
        except (KeyError, IndexError, ValueError) as exc:
            logger.warning("Could not fill placeholders of %s: %r", key, exc)
    return text

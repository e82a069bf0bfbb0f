"""Fallbacks for standard-library features added in Python 3.11."""

from __future__ import annotations

import sys
from enum import Enum

if sys.version_info >= (3, 11):
    import tomllib
    from enum import StrEnum
else:  # pragma: no cover - exercised only on Python < 3.11
    import tomli as tomllib

    class StrEnum(str, Enum):
        """Backport of enum.StrEnum (Python 3.11)."""

        def __new__(cls, *values: str) -> StrEnum:
            value = str(*values)
            member = str.__new__(cls, value)
            member._value_ = value
            return member

        @staticmethod
        def _generate_next_value_(name: str, start: int, count: int, last_values: list[str]) -> str:
            return name.lower()

        __str__ = str.__str__
        __format__ = str.__format__


__all__ = ["StrEnum", "tomllib"]

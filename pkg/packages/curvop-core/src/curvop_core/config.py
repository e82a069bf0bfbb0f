"""Configuration management for curvop."""

from __future__ import annotations

import os
import platform
from ._compat import tomllib
from pathlib import Path
from typing import Any

from .models import UsageError

DEFAULT_CONFIG = """[tolerances]
validation = 1e-9
bianchi = 1e-10
strict = 1e-9

[eigensolver]
max_sweeps = 100
rel_tol = 1e-13

[ricci_k]
restarts = 64
tol = 1e-8
max_iter = 200
initial_step = 0.1
fd_step = 1e-5

[runtime]
# 0 = available parallelism
threads = 0
seed = 0

[output]
format = "table"
"""


class Config:
    """Read-only configuration for the CLI."""

    def __init__(self, config_path: str | Path | None = None) -> None:
        self.config_dir = self._get_config_dir()
        self.config_file = Path(config_path) if config_path else self.config_dir / "config.toml"
        self._config: dict[str, Any] = {}
        self._load()

    def _get_config_dir(self) -> Path:
        """Get XDG config directory."""
        if platform.system() == "Windows":
            base = Path(os.environ.get("APPDATA", Path.home() / "AppData" / "Roaming"))
        elif platform.system() == "Darwin":  # macOS
            base = Path.home() / "Library" / "Application Support"
        else:  # Linux and other Unix
            base = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))

        return base / "curvop"

    def _load(self) -> None:
        """Load configuration from file, falling back to the packaged defaults."""
        defaults = tomllib.loads(DEFAULT_CONFIG)
        if self.config_file.exists():
            with open(self.config_file, "rb") as f:
                try:
                    user = tomllib.load(f)
                except tomllib.TOMLDecodeError as exc:
                    raise UsageError(f"Invalid config file {self.config_file}: {exc}") from None
            self._config = _merge(defaults, user)
        else:
            self._config = defaults

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key (e.g., 'ricci_k.restarts')."""
        keys = key.split(".")
        value = self._config
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def get_seed(self, cli_override: int | None = None) -> int:
        """Seed from the option, then CURVOP_SEED, then the config file."""
        if cli_override is not None:
            return cli_override

        env_seed = os.getenv("CURVOP_SEED")
        if env_seed:
            try:
                return int(env_seed)
            except ValueError:
                raise UsageError(f"CURVOP_SEED must be an integer, got {env_seed!r}") from None

        return int(self.get("runtime.seed", 0))

    def get_threads(self, cli_override: int | None = None) -> int:
        """Worker count; 0 means available parallelism."""
        threads = cli_override
        if threads is None:
            env_threads = os.getenv("CURVOP_THREADS")
            if env_threads:
                try:
                    threads = int(env_threads)
                except ValueError:
                    raise UsageError(f"CURVOP_THREADS must be an integer, got {env_threads!r}") from None
            else:
                threads = int(self.get("runtime.threads", 0))
        if threads < 0:
            raise UsageError(f"threads must be >= 0, got {threads}")
        if threads == 0:
            threads = os.cpu_count() or 1
        return threads


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged

from __future__ import annotations

import os

import pytest
from curvop_core import Config, UsageError


@pytest.fixture
def no_env(monkeypatch):
    monkeypatch.delenv("CURVOP_SEED", raising=False)
    monkeypatch.delenv("CURVOP_THREADS", raising=False)


def test_defaults_without_file(tmp_path, no_env):
    config = Config(tmp_path / "missing.toml")
    assert config.get("ricci_k.restarts") == 64
    assert config.get("tolerances.validation") == 1e-9
    assert config.get("output.format") == "table"
    assert config.get("ricci_k.nope", "fallback") == "fallback"
    assert config.get_seed() == 0


def test_user_file_overrides_defaults(tmp_path, no_env):
    path = tmp_path / "config.toml"
    path.write_text("[ricci_k]\nrestarts = 8\n\n[runtime]\nseed = 42\nthreads = 2\n", encoding="utf-8")
    config = Config(path)
    assert config.get("ricci_k.restarts") == 8
    # Keys the file does not mention keep their defaults.
    assert config.get("ricci_k.tol") == 1e-8
    assert config.get_seed() == 42
    assert config.get_threads() == 2


def test_invalid_file(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[ricci_k\n", encoding="utf-8")
    with pytest.raises(UsageError, match="Invalid config file"):
        Config(path)


def test_seed_precedence(tmp_path, monkeypatch):
    config = Config(tmp_path / "missing.toml")
    monkeypatch.setenv("CURVOP_SEED", "17")
    assert config.get_seed() == 17
    assert config.get_seed(5) == 5
    monkeypatch.setenv("CURVOP_SEED", "seventeen")
    with pytest.raises(UsageError):
        config.get_seed()


def test_threads(tmp_path, monkeypatch, no_env):
    config = Config(tmp_path / "missing.toml")
    assert config.get_threads() == (os.cpu_count() or 1)
    assert config.get_threads(3) == 3
    monkeypatch.setenv("CURVOP_THREADS", "4")
    assert config.get_threads() == 4
    with pytest.raises(UsageError):
        config.get_threads(-1)


def test_default_location_follows_xdg(tmp_path, monkeypatch):
    monkeypatch.setattr("platform.system", lambda: "Linux")
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
    config = Config()
    assert config.config_file == tmp_path / "curvop" / "config.toml"

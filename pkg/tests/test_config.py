"""Tests for configuration loading, overrides and the global singleton."""

import json

import pytest

from realizer import config as config_module
from realizer.config import (
    RealizerConfig,
    configure,
    env_name,
    get_config,
    parse_value,
    reset_config,
    value_sources,
)


class TestDefaults:
    def test_defaults(self):
        config = RealizerConfig()
        assert config.seed == 42
        assert config.specializations == 4
        assert config.height_bound == 50
        assert config.verify is True
        assert config.max_workers == 1
        assert config.reparam_method == "implicit"

    @pytest.mark.parametrize(
        "field,value,message",
        [
            ("specializations", 0, "at least 1"),
            ("height_bound", -1, "non-negative"),
            ("max_workers", 0, "at least 1"),
            ("reparam_method", "guess", "must be one of"),
        ],
    )
    def test_validation(self, field, value, message):
        with pytest.raises(ValueError, match=message):
            RealizerConfig(**{field: value})


class TestParseValue:
    """String values from env vars and `config set`."""

    def test_bool(self):
        assert parse_value("verify", "yes") is True
        assert parse_value("verify", "OFF") is False
        with pytest.raises(ValueError, match="not a boolean"):
            parse_value("verify", "maybe")

    def test_int(self):
        assert parse_value("height_bound", "200") == 200
        with pytest.raises(ValueError):
            parse_value("seed", "abc")

    def test_method(self):
        assert parse_value("reparam_method", "ansatz") == "ansatz"
        with pytest.raises(ValueError, match="unknown method"):
            parse_value("reparam_method", "guess")

    def test_unknown_key(self):
        with pytest.raises(KeyError):
            parse_value("colour", "blue")


class TestLoad:
    """File, env var and programmatic layers."""

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("REALIZER_HEIGHT_BOUND", "7")
        monkeypatch.setenv("REALIZER_VERIFY", "false")
        config = RealizerConfig.load()
        assert config.height_bound == 7
        assert config.verify is False

    def test_invalid_env_ignored(self, monkeypatch):
        monkeypatch.setenv("REALIZER_SEED", "not-a-number")
        assert RealizerConfig.load().seed == 42

    def test_save_and_load(self):
        RealizerConfig(seed=9, reparam_method="ansatz").save()
        assert json.loads(config_module.CONFIG_FILE.read_text())["seed"] == 9
        loaded = RealizerConfig.load()
        assert loaded.seed == 9
        assert loaded.reparam_method == "ansatz"

    def test_env_beats_file(self, monkeypatch):
        RealizerConfig(seed=9).save()
        monkeypatch.setenv("REALIZER_SEED", "11")
        assert RealizerConfig.load().seed == 11

    def test_unknown_and_invalid_file_values(self):
        path = config_module.CONFIG_FILE
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"seed": 3, "colour": "blue"}))
        assert RealizerConfig.load().seed == 3

        path.write_text(json.dumps({"height_bound": -5}))
        assert RealizerConfig.load() == RealizerConfig()

        path.write_text("{not json")
        assert RealizerConfig.load() == RealizerConfig()

    def test_updated(self):
        config = RealizerConfig()
        changed = config.updated(seed=5, verify=None)
        assert changed.seed == 5
        assert changed.verify is True
        assert config.seed == 42
        with pytest.raises(ValueError):
            config.updated(max_workers=0)

    def test_value_sources(self, monkeypatch):
        assert set(value_sources().values()) == {"default"}
        RealizerConfig(seed=9).save()
        monkeypatch.setenv("REALIZER_VERIFY", "no")
        sources = value_sources()
        assert sources["verify"] == "env"
        assert sources["seed"] == "file"
        assert sources["max_workers"] == "file"
        assert env_name("height_bound") == "REALIZER_HEIGHT_BOUND"


class TestSingleton:
    def test_configure_and_reset(self):
        custom = RealizerConfig(seed=123)
        configure(custom)
        assert get_config() is custom
        reset_config()
        assert get_config().seed == 42

    def test_cached(self):
        assert get_config() is get_config()

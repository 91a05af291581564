"""Tests for configuration loading, environment overrides and flag files."""

import logging

import pytest
import yaml

from src.config.config_manager import (
    DEFAULT_DEGREE_CAP,
    ConfigManager,
    load_flag_file,
)
from src.config.logging_config import setup_logging


@pytest.fixture
def config_file(tmp_path):
    def write(data):
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump(data), encoding="utf-8")
        return path

    return write


class TestConfigManager:
    def test_defaults_without_file(self, tmp_path):
        manager = ConfigManager(tmp_path / "missing.yaml", use_env=False)
        assert manager.get_degree_cap() == DEFAULT_DEGREE_CAP
        assert manager.get_aut_config() == {"default_alpha": 1}
        assert manager.get_output_config()["format"] == "table"

    def test_file_merges_over_defaults(self, config_file):
        path = config_file({"engine": {"degree_cap": 24}})
        manager = ConfigManager(path, use_env=False)
        assert manager.get_degree_cap() == 24
        assert manager.get_logging_config()["level"] == "WARNING"

    def test_shipped_config(self):
        manager = ConfigManager(use_env=False)
        assert manager.get_degree_cap() == 60
        assert manager.get_aut_config()["default_alpha"] == 1

    def test_environment_overrides(self, config_file, monkeypatch):
        monkeypatch.setenv("WHITEALG_DEGREE_CAP", "32")
        monkeypatch.setenv("WHITEALG_OUTPUT", "json")
        manager = ConfigManager(config_file({"engine": {"degree_cap": 24}}))
        assert manager.get_degree_cap() == 32
        assert manager.get_output_config()["format"] == "json"

    def test_bad_environment_value(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WHITEALG_DEGREE_CAP", "lots")
        with pytest.raises(ValueError):
            ConfigManager(tmp_path / "missing.yaml").get_config()

    def test_non_positive_cap(self, config_file):
        path = config_file({"engine": {"degree_cap": 0}})
        manager = ConfigManager(path, use_env=False)
        with pytest.raises(ValueError):
            manager.get_degree_cap()

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("- just\n- a list\n", encoding="utf-8")
        with pytest.raises(ValueError):
            ConfigManager(path, use_env=False).get_config()

    def test_save_and_reload(self, tmp_path):
        path = tmp_path / "config.yaml"
        manager = ConfigManager(path, use_env=False)
        config = manager.get_config()
        config["aut"]["default_alpha"] = 3
        manager.save_config(config)
        assert ConfigManager(path, use_env=False).get_aut_config()["default_alpha"] == 3


class TestFlagFile:
    def test_keys_become_destinations(self, config_file):
        flags = load_flag_file(config_file({"--max-dim": 21, "space": "cp"}))
        assert flags == {"max_dim": 21, "space": "cp"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_flag_file(tmp_path / "nope.yaml")

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "flags.yaml"
        path.write_text("space: [hp\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_flag_file(path)


class TestLogging:
    def test_setup_logging(self):
        logger = setup_logging("debug")
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 1
        setup_logging("WARNING")
        assert len(logger.handlers) == 1

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            setup_logging("chatty")

#!/usr/bin/env python3
"""
Configuration Manager for whitealg

This module handles loading and managing configuration from YAML files, with
environment overrides read through python-dotenv.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

DEFAULT_DEGREE_CAP = 60

DEFAULT_CONFIG: Dict[str, Any] = {
    "engine": {"degree_cap": DEFAULT_DEGREE_CAP},
    "aut": {"default_alpha": 1},
    "output": {"format": "table"},
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s  %(levelname)8s: %(message)s",
    },
}

ENV_OVERRIDES = {
    "WHITEALG_DEGREE_CAP": ("engine", "degree_cap", int),
    "WHITEALG_LOG_LEVEL": ("logging", "level", str),
    "WHITEALG_OUTPUT": ("output", "format", str),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Manages application configuration from YAML files."""

    def __init__(self, config_path: Optional[str] = None, use_env: bool = True):
        """
        Initialize the configuration manager.

        Args:
            config_path: Path to the config file. If None, uses default location.
            use_env: Whether WHITEALG_* environment variables override the file
        """
        if config_path is None:
            # Default to config/config.yaml in project root
            project_root = Path(__file__).parent.parent.parent
            config_path = project_root / "config" / "config.yaml"

        self.config_path = Path(config_path)
        self.use_env = use_env
        self._config = None
        self._last_modified = None

    def get_config(self) -> Dict[str, Any]:
        """
        Load and return the configuration.

        Returns:
            Dictionary containing the full configuration.
        """
        if self._config is None or self._config_needs_reload():
            self._load_config()
        return self._config

    def _config_needs_reload(self) -> bool:
        """Check if config needs to be reloaded based on file modification time."""
        try:
            current_modified = os.path.getmtime(self.config_path)
            return self._last_modified != current_modified
        except OSError:
            return False

    def _load_config(self):
        """Load configuration from the YAML file, falling back to defaults."""
        loaded: Dict[str, Any] = {}
        if self.config_path.exists():
            try:
                self._last_modified = os.path.getmtime(self.config_path)
                with open(self.config_path, "r", encoding="utf-8") as file:
                    loaded = yaml.safe_load(file) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Error parsing configuration file: {e}")
            except OSError as e:
                raise OSError(f"Error reading configuration file: {e}")
            if not isinstance(loaded, dict):
                raise ValueError(
                    f"Configuration file must hold a mapping: {self.config_path}"
                )

        config = _merge(DEFAULT_CONFIG, loaded)
        if self.use_env:
            self._apply_env_overrides(config)
        self._config = config

    @staticmethod
    def _apply_env_overrides(config: Dict[str, Any]) -> None:
        load_dotenv()
        for variable, (section, key, cast) in ENV_OVERRIDES.items():
            raw = os.environ.get(variable)
            if raw is None or raw == "":
                continue
            try:
                config.setdefault(section, {})[key] = cast(raw)
            except ValueError:
                raise ValueError(f"Invalid value for {variable}: {raw!r}")

    def get_engine_config(self) -> Dict[str, Any]:
        """Get engine configuration (degree cap)."""
        return self.get_config().get("engine", {})

    def get_aut_config(self) -> Dict[str, Any]:
        """Get automorphism-analysis configuration."""
        return self.get_config().get("aut", {})

    def get_output_config(self) -> Dict[str, Any]:
        """Get output configuration."""
        return self.get_config().get("output", {})

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return self.get_config().get("logging", {})

    def get_degree_cap(self) -> int:
        cap = int(self.get_engine_config().get("degree_cap", DEFAULT_DEGREE_CAP))
        if cap <= 0:
            raise ValueError("engine.degree_cap must be positive")
        return cap

    def save_config(self, config: Dict[str, Any] = None):
        """
        Save the configuration to file.

        Args:
            config: Configuration dictionary to save. If None, saves the cached
                config.
        """
        if config is None:
            config = self._config

        if config is None:
            raise ValueError("No configuration to save")

        with open(self.config_path, "w", encoding="utf-8") as file:
            yaml.dump(config, file, default_flow_style=False, sort_keys=False)

        self._config = config


def load_flag_file(path: str) -> Dict[str, Any]:
    """
    Read a key-value YAML file of CLI flag values for ``--config``.

    Args:
        path: File path; keys are flag names with or without leading dashes

    Returns:
        Mapping of argparse destination names to values
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = yaml.safe_load(file) or {}
    except FileNotFoundError:
        raise FileNotFoundError(f"Configuration file not found: {path}")
    except yaml.YAMLError as e:
        raise ValueError(f"Error parsing configuration file: {e}")
    if not isinstance(data, dict):
        raise ValueError(f"Flag file must hold a mapping: {path}")
    return {str(k).lstrip("-").replace("-", "_"): v for k, v in data.items()}

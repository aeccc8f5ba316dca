"""Configuration management for ~/.wcm/config.toml."""

import copy
import os
import sys
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

import tomli_w

from config.defaults import DEFAULT_CONFIG
from config.schema import validate_config

WCM_DIR = Path.home() / ".wcm"
CONFIG_FILE = WCM_DIR / "config.toml"
TIME_LIMIT_ENV = "WCM_TIME_LIMIT"

__all__ = [
    "WCM_DIR",
    "CONFIG_FILE",
    "TIME_LIMIT_ENV",
    "ensure_wcm_dir",
    "load_config",
    "save_config",
    "get_default_config",
    "validate_config",
]


def ensure_wcm_dir() -> Path:
    """Ensure ~/.wcm/ directory exists."""
    WCM_DIR.mkdir(parents=True, exist_ok=True)
    return WCM_DIR


def get_default_config() -> dict[str, Any]:
    """Return a copy of the default configuration."""
    return copy.deepcopy(DEFAULT_CONFIG)


def load_config(config_path: Path | None = None) -> dict[str, Any]:
    """Load configuration from TOML file.

    Sections found in the file are merged over the defaults; unknown
    sections are ignored. ``WCM_TIME_LIMIT`` then overrides
    ``solver.time_limit``.

    Args:
        config_path: Override config file path. Defaults to ~/.wcm/config.toml.

    Returns:
        Configuration dictionary with defaults applied.

    Raises:
        ValueError: The merged configuration or the environment override is invalid.
    """
    path = config_path or CONFIG_FILE
    config = get_default_config()

    if path.exists():
        with open(path, "rb") as f:
            loaded = tomllib.load(f)
        for section in config:
            if section in loaded:
                config[section].update(loaded[section])

    override = os.environ.get(TIME_LIMIT_ENV)
    if override:
        try:
            config["solver"]["time_limit"] = float(override)
        except ValueError:
            raise ValueError(f"{TIME_LIMIT_ENV} must be a number, got '{override}'") from None

    validate_config(config)
    return config


def save_config(config: dict[str, Any], config_path: Path | None = None) -> None:
    """Save configuration to TOML file.

    Args:
        config: Configuration dictionary to save.
        config_path: Override config file path. Defaults to ~/.wcm/config.toml.

    Raises:
        ValueError: If configuration is invalid.
    """
    validate_config(config)

    path = config_path or CONFIG_FILE
    if config_path is None:
        ensure_wcm_dir()
    else:
        path.parent.mkdir(parents=True, exist_ok=True)

    # TOML can't serialize None
    config_to_save = {}
    for section, values in config.items():
        if isinstance(values, dict):
            config_to_save[section] = {k: v for k, v in values.items() if v is not None}
        elif values is not None:
            config_to_save[section] = values

    with open(path, "wb") as f:
        tomli_w.dump(config_to_save, f)

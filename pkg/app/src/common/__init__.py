# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Core application package for common helpers.

This package contains the configuration loader shared by the engine and the
command line surface.
"""

import os
import yaml


def _get_config_path():
    """Return the config path, allowing GKCRYSTAL_CONFIG_FILE override.

    Falls back to the shipped ``config.example.yaml`` when no local
    ``config.yaml`` has been created.
    """
    override = os.getenv("GKCRYSTAL_CONFIG_FILE")
    if override:
        return override
    default_path = os.path.join(os.path.dirname(__file__), "config.yaml")
    if os.path.exists(default_path):
        return default_path
    return os.path.join(os.path.dirname(__file__), "config.example.yaml")


def _as_bool(value: str) -> bool:
    return value.lower() in {"1", "true", "yes", "on"}


def _override_engine_settings(config):
    """Override YAML values with environment variables if provided."""
    engine_cfg = config.setdefault("engine", {})
    env_overrides = {
        "max_rank": os.getenv("GKCRYSTAL_MAX_RANK"),
        "verify_depth": os.getenv("GKCRYSTAL_VERIFY_DEPTH"),
        "graph_depth": os.getenv("GKCRYSTAL_GRAPH_DEPTH"),
        "enumerate_depth": os.getenv("GKCRYSTAL_ENUMERATE_DEPTH"),
        "cache_size": os.getenv("GKCRYSTAL_CACHE_SIZE"),
        "strategy": os.getenv("GKCRYSTAL_STRATEGY"),
    }

    for key, value in env_overrides.items():
        if value is None:
            continue
        if key == "strategy":
            engine_cfg[key] = value.strip().lower()
        else:
            try:
                engine_cfg[key] = int(value)
            except ValueError as exc:
                raise ValueError(f"Invalid integer for engine.{key}: {value!r}") from exc

    logging_cfg = config.setdefault("logging", {})
    log_level = os.getenv("GKCRYSTAL_LOG_LEVEL")
    if log_level:
        logging_cfg["level"] = log_level.lower()

    audit_cfg = config.setdefault("audit", {})
    audit_path = os.getenv("GKCRYSTAL_AUDIT_LOG")
    if audit_path is not None:
        audit_cfg["path"] = audit_path or None
    audit_enabled = os.getenv("GKCRYSTAL_AUDIT_ENABLED")
    if audit_enabled is not None and not _as_bool(audit_enabled):
        audit_cfg["path"] = None

    return config


def load_config():
    """Load configuration from YAML file with optional env overrides."""
    config_path = _get_config_path()
    with open(config_path, 'r', encoding='utf-8') as file:
        config = yaml.safe_load(file) or {}
    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {config_path} must define a mapping")
    return _override_engine_settings(config)

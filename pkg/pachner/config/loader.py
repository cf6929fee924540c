"""Assemble a RunConfig from defaults, environment, YAML file and flags."""

import logging
import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import yaml
from dotenv import dotenv_values

from pachner.config.models import RunConfig
from pachner.errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_FILE = "pachner.yaml"

# environment variable -> config field
ENV_FIELDS = {
    "PACHNER_JOBS": "jobs",
    "PACHNER_SPHERES_DIR": "spheres_dir",
}


def env_settings(env_file: Path | None = None) -> dict[str, Any]:
    """Config fields set in ``.env`` or the process environment (the latter wins)."""
    path = env_file if env_file is not None else Path(".env")
    values = dict(dotenv_values(path)) if path.exists() else {}
    values.update(os.environ)
    return {field: values[var] for var, field in ENV_FIELDS.items() if values.get(var)}


def read_config_file(path: Path) -> dict[str, Any]:
    """Parse a YAML config file into a mapping.

    Raises:
        ConfigError: The file cannot be read or is not a YAML mapping.

    """
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Failed to parse YAML in {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must contain a mapping")
    return data


def _merge(base: dict[str, Any], override: Mapping[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if value is None:
            continue
        if isinstance(value, Mapping):
            existing = merged.get(key)
            nested = dict(existing) if isinstance(existing, Mapping) else {}
            merged[key] = _merge(nested, value)
        else:
            merged[key] = value
    return merged


def load_config(
    path: Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    env_file: Path | None = None,
) -> RunConfig:
    """Build the run configuration.

    Precedence, highest first: ``overrides`` (command-line flags, None values
    ignored), the YAML file, the environment, model defaults. Without an
    explicit ``path``, ``./pachner.yaml`` is used when present.

    Raises:
        ConfigError: A source is unreadable or the merged values are invalid.

    """
    data = env_settings(env_file)
    if path is not None:
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")
        data = _merge(data, read_config_file(path))
    elif Path(CONFIG_FILE).exists():
        logger.debug("Using %s", CONFIG_FILE)
        data = _merge(data, read_config_file(Path(CONFIG_FILE)))
    data = _merge(data, overrides or {})
    try:
        return RunConfig.model_validate(data)
    except ValueError as e:  # includes ValidationError
        raise ConfigError(str(e)) from e

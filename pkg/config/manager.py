"""Configuration for triplecover.

Settings live in ``config.yaml`` in the working directory. Every key has a
built-in default; values of the wrong type or out of range are replaced by
the default with a warning, so a bad file never reaches the algorithms.
"""
from __future__ import annotations

import copy
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import yaml

from core.exceptions import ConfigurationError
from core.logging_config import get_logger

logger = get_logger(__name__)

Check = Callable[[Any], bool]


def _non_negative_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def _positive_int(value: Any) -> bool:
    return _non_negative_int(value) and value > 0


def _flag(value: Any) -> bool:
    return isinstance(value, bool)


def _log_level(value: Any) -> bool:
    return isinstance(value, str) and isinstance(logging.getLevelName(value.upper()), int)


# section -> key -> (default, check)
SETTINGS: Dict[str, Dict[str, Tuple[Any, Check]]] = {
    "construction": {
        "seed": (0, _non_negative_int),
        "max_candidates": (10000, _positive_int),
    },
    "factorization": {
        "seed": (0, _non_negative_int),
    },
    "oracle": {
        "max_field_size": (1000000, _positive_int),
        "workers": (0, _non_negative_int),
        "chunk_size": (2048, _positive_int),
        "show_progress": (False, _flag),
    },
    "output": {
        "indent": (2, _non_negative_int),
    },
    "logging": {
        "level": ("WARNING", _log_level),
        "file": (False, _flag),
    },
}


def default_config() -> Dict[str, Any]:
    return {section: {key: default for key, (default, _) in keys.items()} for section, keys in SETTINGS.items()}


def _merge(base: Dict[str, Any], overrides: Dict[str, Any]) -> None:
    for key, value in overrides.items():
        if isinstance(base.get(key), dict) and isinstance(value, dict):
            _merge(base[key], value)
        else:
            base[key] = value


def _sanitize(config: Dict[str, Any]) -> None:
    for section, keys in SETTINGS.items():
        if not isinstance(config.get(section), dict):
            logger.warning(f"config section {section!r} is not a mapping, using defaults")
            config[section] = {key: default for key, (default, _) in keys.items()}
            continue
        for key, (default, check) in keys.items():
            value = config[section].get(key, default)
            if not check(value):
                logger.warning(f"config value {section}.{key}={value!r} is invalid, using {default!r}")
                value = default
            config[section][key] = value


class ConfigManager:
    """Loads, validates and persists ``config.yaml``; reads are cached."""

    def __init__(self, config_path: Optional[Path] = None):
        self._config_path = Path(config_path) if config_path else Path("config.yaml")
        self._cache: Optional[Dict[str, Any]] = None

    @property
    def config_path(self) -> Path:
        return self._config_path

    def _read_file(self) -> Dict[str, Any]:
        if not self._config_path.exists():
            logger.debug(f"{self._config_path} not found, using defaults")
            return {}
        try:
            with self._config_path.open(encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"Cannot read {self._config_path}, using defaults: {e}")
            return {}
        if data is None:
            return {}
        if not isinstance(data, dict):
            logger.error(f"Ignoring {self._config_path}: top level is not a mapping")
            return {}
        return data

    def load_config(self) -> Dict[str, Any]:
        """Defaults merged with the file; returns a copy."""
        if self._cache is None:
            config = default_config()
            _merge(config, self._read_file())
            _sanitize(config)
            self._cache = config
        return copy.deepcopy(self._cache)

    def save_config(self, config: Dict[str, Any]) -> None:
        """Write ``config`` to the file.

        Raises:
            ConfigurationError: If the file cannot be written.
        """
        try:
            self._config_path.parent.mkdir(parents=True, exist_ok=True)
            with self._config_path.open("w", encoding="utf-8") as f:
                yaml.safe_dump(config, f, sort_keys=False, default_flow_style=False)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"Failed to save configuration to {self._config_path}: {e}") from e
        self._cache = None
        logger.debug(f"Configuration saved to {self._config_path}")

    def update_config(self, updates: Dict[str, Any]) -> None:
        config = self.load_config()
        _merge(config, updates)
        self.save_config(config)

    def get_value(self, key: str, default: Any = None) -> Any:
        """Value at a dotted key such as ``oracle.workers``."""
        value: Any = self.load_config()
        for part in key.split("."):
            if not isinstance(value, dict) or part not in value:
                return default
            value = value[part]
        return default if value is None else value

    def set_value(self, key: str, value: Any) -> None:
        config = self.load_config()
        *sections, last = key.split(".")
        target = config
        for part in sections:
            if not isinstance(target.get(part), dict):
                target[part] = {}
            target = target[part]
        target[last] = value
        self.save_config(config)

    def invalidate_cache(self) -> None:
        self._cache = None


config_manager = ConfigManager()

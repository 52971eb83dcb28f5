"""
Configuration management for molr.
Loads a YAML config file into dataclass sections; environment variables
override the enumeration budget and worker count.
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

BUDGET_ENV = "MOLR_BUDGET"
WORKERS_ENV = "MOLR_WORKERS"

DEFAULT_BUDGET = 5_000_000
DEFAULT_CHUNK_SIZE = 16


def _clamp_int(value: Any, default: int, low: int, high: Optional[int] = None) -> int:
    """Clamp a config value to [low, high]; use default if invalid."""
    if value is None:
        return default
    try:
        n = int(value)
    except (TypeError, ValueError):
        return default
    if n < low:
        return low
    if high is not None and n > high:
        return high
    return n


@dataclass
class EnumerationSettings:
    """Enumeration pipeline settings."""
    budget: int = DEFAULT_BUDGET  # classes allowed in one frontier
    workers: int = 1
    chunk_size: int = DEFAULT_CHUNK_SIZE  # parents per worker task
    level_dir: Optional[str] = None  # stream each level's records here


@dataclass
class OutputSettings:
    """Where and how results are written."""
    directory: str = "."
    format: str = "text"  # text, json


class Config:
    """Main configuration class."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or self._find_config()
        self.data: Dict[str, Any] = {}
        self.enumeration = EnumerationSettings()
        self.output = OutputSettings()

        if self.config_path and os.path.exists(self.config_path):
            self.load()
        else:
            self._load_defaults()

    def _find_config(self) -> Optional[str]:
        """Find configuration file in standard locations."""
        config_locations = [
            os.path.expanduser("~/.config/molr/config.yaml"),
            os.path.expanduser("~/.molr/config.yaml"),
            "/etc/molr/config.yaml",
            os.path.join(os.getcwd(), "config.yaml"),
        ]

        for path in config_locations:
            if os.path.exists(path):
                return path

        return None

    def _load_defaults(self):
        """Load default configuration."""
        self.data = {
            "enumeration": {
                "budget": DEFAULT_BUDGET,
                "workers": 1,
                "chunk_size": DEFAULT_CHUNK_SIZE,
            },
            "output": {"directory": ".", "format": "text"},
            "logging": {"level": "INFO"},
        }
        self._parse_config()

    def load(self):
        """Load configuration from file."""
        try:
            with open(self.config_path, 'r') as f:
                self.data = yaml.safe_load(f) or {}
            if not isinstance(self.data, dict):
                raise ValueError("top level must be a mapping")
            self._parse_config()
        except Exception as e:
            raise ValueError(f"Failed to load config from {self.config_path}: {e}")

    def _parse_config(self):
        """Parse loaded configuration into dataclasses."""
        enum = self.data.get("enumeration") or {}
        self.enumeration = EnumerationSettings(
            budget=_clamp_int(enum.get("budget"), DEFAULT_BUDGET, 1),
            workers=_clamp_int(enum.get("workers"), 1, 1, os.cpu_count() or 1),
            chunk_size=_clamp_int(enum.get("chunk_size"), DEFAULT_CHUNK_SIZE, 1),
            level_dir=enum.get("level_dir"),
        )

        out = self.data.get("output") or {}
        fmt = out.get("format", "text")
        self.output = OutputSettings(
            directory=out.get("directory", "."),
            format=fmt if fmt in ("text", "json") else "text",
        )


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        # Imported lazily: logging.py imports this module
        from .logging import get_logger
        get_logger('config').warning(f"Ignoring {name}={raw!r}: not an integer")
        return None


def effective_budget(config: Config) -> int:
    """Class budget per level; MOLR_BUDGET wins over the config file."""
    value = _env_int(BUDGET_ENV)
    if value is not None and value >= 1:
        return value
    return config.enumeration.budget


def effective_workers(config: Config) -> int:
    """Worker processes, clamped to [1, cpu count]; MOLR_WORKERS wins."""
    cap = os.cpu_count() or 1
    value = _env_int(WORKERS_ENV)
    if value is not None:
        return _clamp_int(value, 1, 1, cap)
    return _clamp_int(config.enumeration.workers, 1, 1, cap)

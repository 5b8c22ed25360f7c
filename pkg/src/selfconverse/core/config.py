"""
Configuration management for selfconverse.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)


class SelfConverseConfig(BaseModel):
    """Global configuration schema."""

    model_config = ConfigDict(extra="forbid")

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    # Search caps
    witness_search_cap: int = Field(default=10, ge=1)
    symmetric_search_cap: int = Field(default=24, ge=1)
    symmetric_strategy: Literal["peel", "backtrack"] = "peel"

    # Oracle
    oracle_max_n: int = Field(default=6, ge=1)
    oracle_chunk_size: int = Field(default=4096, ge=1)
    executor_mode: Literal["sync", "thread", "process"] = "sync"
    max_workers: int = Field(default=4, ge=1)


class ConfigManager:
    """
    Process-wide configuration holder.

    Starts from defaults; ``load`` replaces the active settings with the
    contents of a YAML file. Environment variables are never consulted.
    """

    _instance: Optional["ConfigManager"] = None

    def __new__(cls) -> "ConfigManager":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._config = SelfConverseConfig()
        return cls._instance

    _config: SelfConverseConfig

    def load(self, path: Union[str, Path]) -> SelfConverseConfig:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} must contain a mapping")
        self._config = SelfConverseConfig.model_validate(data)
        logger.debug(f"Loaded configuration from {path}")
        return self._config

    def update(self, **overrides: object) -> SelfConverseConfig:
        self._config = SelfConverseConfig.model_validate({**self._config.model_dump(), **overrides})
        return self._config

    def reset(self) -> SelfConverseConfig:
        self._config = SelfConverseConfig()
        return self._config

    @property
    def config(self) -> SelfConverseConfig:
        return self._config


def get_settings() -> SelfConverseConfig:
    return ConfigManager().config

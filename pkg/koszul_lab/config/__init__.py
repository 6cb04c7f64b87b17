"""Configuration and settings."""

from .settings import EngineConfig, DEFAULT_CONFIG
from .runtime import get_settings, update_settings, reset_settings, RuntimeSettings

__all__ = [
    "EngineConfig",
    "DEFAULT_CONFIG",
    "get_settings",
    "update_settings",
    "reset_settings",
    "RuntimeSettings",
]

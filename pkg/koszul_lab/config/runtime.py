"""
Runtime settings for koszul_lab.

These settings are toggled per invocation (the CLI sets them from flags),
unlike settings.py which is loaded from environment variables at startup.
"""

from dataclasses import dataclass
from typing import Optional
import threading


@dataclass
class RuntimeSettings:
    """Runtime-configurable settings."""

    verbose: bool = False  # Print tagged progress lines on stderr

    def to_dict(self) -> dict:
        """Convert to dictionary for run logs."""
        return {
            "verbose": self.verbose,
        }

    def update_from_dict(self, data: dict) -> None:
        """Update settings from dictionary."""
        if "verbose" in data:
            self.verbose = bool(data["verbose"])


# Thread-safe singleton for runtime settings
_settings_lock = threading.Lock()
_settings: Optional[RuntimeSettings] = None


def get_settings() -> RuntimeSettings:
    """Get the global runtime settings instance."""
    global _settings
    with _settings_lock:
        if _settings is None:
            _settings = RuntimeSettings()
        return _settings


def update_settings(data: dict) -> RuntimeSettings:
    """Update runtime settings from dictionary."""
    settings = get_settings()
    with _settings_lock:
        settings.update_from_dict(data)
    return settings


def reset_settings() -> None:
    """Drop the singleton so the next get_settings() starts from defaults."""
    global _settings
    with _settings_lock:
        _settings = None

"""Utility modules."""

from .logger import RunLogger, emit, list_run_logs, load_run_log
from .paths import resolve_path, set_data_dir

__all__ = [
    "RunLogger",
    "emit",
    "list_run_logs",
    "load_run_log",
    "resolve_path",
    "set_data_dir",
]

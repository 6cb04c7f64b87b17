"""
Path utilities for resolving input files.

Relative paths given on the command line (graph files, presentation documents,
`qn-graph:<path>` sources) resolve against the configured data directory when
one is set, and against the current working directory otherwise.
"""

from pathlib import Path
from typing import Optional


# Base directory for relative input paths, set by the CLI from EngineConfig.data_dir
_data_dir: Optional[Path] = None


def set_data_dir(path: Optional[Path]) -> None:
    """Set the data directory used for relative paths."""
    global _data_dir
    _data_dir = path


def resolve_path(path_str: str) -> Path:
    """
    Resolve a path string to an absolute Path.

    Args:
        path_str: Path string (can be relative or absolute)

    Returns:
        Resolved absolute Path
    """
    path = Path(path_str).expanduser()
    if path.is_absolute():
        return path

    if _data_dir is not None:
        return (_data_dir / path).resolve()

    return path.resolve()

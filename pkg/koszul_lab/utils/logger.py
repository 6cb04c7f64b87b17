"""
Run Logger - records what each CLI invocation computed.

Logs:
- The command and its validated configuration
- One step per pipeline stage (status, detail, duration)
- Output files written
- Exit code

Payload files stay deterministic: timestamps and session ids only ever go to
logs/run_<session>.json and to the <output>.meta.json sidecar.

Progress lines ("[COMPLETE] degree 4: ...") go through emit() and are shown on
stderr only when the runtime `verbose` setting is on.
"""

import json
import sys
import hashlib
from pathlib import Path
from typing import Dict, Any, Optional, List
from dataclasses import dataclass, field
from datetime import datetime

from dateutil.parser import isoparse

from ..config.runtime import get_settings


def emit(tag: str, message: str) -> None:
    """Print a tagged progress line to stderr when verbose output is on."""
    if get_settings().verbose:
        print(f"[{tag}] {message}", file=sys.stderr)


@dataclass
class StepRecord:
    """One stage of a run (completion, counting, certificate cell batch...)."""
    name: str
    status: str  # "ok", "fail", "warn", "skip"
    detail: Optional[str] = None
    duration_ms: Optional[float] = None
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())


@dataclass
class RunLog:
    """Complete log of one CLI invocation."""
    session_id: str
    command: str
    config: Dict[str, Any] = field(default_factory=dict)
    started_at: str = field(default_factory=lambda: datetime.now().isoformat())
    ended_at: Optional[str] = None
    steps: List[StepRecord] = field(default_factory=list)
    outputs: List[str] = field(default_factory=list)
    exit_code: Optional[int] = None
    settings: Dict[str, Any] = field(default_factory=dict)  # runtime settings at start


class RunLogger:
    """
    Logger for a single run.

    Logs are saved to: logs/run_YYYY-MM-DD_HH-MM-SS_<hash>.json
    """

    def __init__(self, logs_dir: Path, command: str,
                 config: Optional[Dict[str, Any]] = None):
        """
        Initialize run logger.

        Args:
            logs_dir: Directory for run logs
            command: CLI subcommand name
            config: Validated run configuration (JSON-serializable)
        """
        self.logs_dir = logs_dir

        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        session_hash = hashlib.md5(f"{timestamp}{command}{config}".encode()).hexdigest()[:8]
        self.session_id = f"{timestamp}_{session_hash}"

        self.log = RunLog(
            session_id=self.session_id,
            command=command,
            config=dict(config or {}),
            settings=get_settings().to_dict(),
        )
        self.log_file = self.logs_dir / f"run_{self.session_id}.json"
        self._step_start: Optional[datetime] = None

        emit("RUN", f"Session started: {self.session_id}")

    def start_step(self) -> None:
        """Mark the start of a timed step."""
        self._step_start = datetime.now()

    def log_step(self, name: str, status: str = "ok", detail: Optional[str] = None):
        """
        Record a finished step; its duration runs from the last start_step().

        Args:
            name: Step name (e.g. "complete", "count", "certificate")
            status: "ok", "fail", "warn" or "skip"
            detail: One-line human summary
        """
        duration = None
        if self._step_start is not None:
            duration = (datetime.now() - self._step_start).total_seconds() * 1000.0
            self._step_start = None
        self.log.steps.append(StepRecord(name=name, status=status, detail=detail,
                                         duration_ms=duration))
        emit("RUN", f"{name}: {status}" + (f" ({detail})" if detail else ""))

    def record_output(self, path: Path) -> None:
        """Remember an output file and drop its metadata sidecar next to it."""
        self.log.outputs.append(str(path))
        self.write_sidecar(path)

    def end_run(self, exit_code: int) -> None:
        """Mark the run as ended and save the final state."""
        self.log.exit_code = exit_code
        self.log.ended_at = datetime.now().isoformat()
        self.save()
        emit("RUN", f"Session ended: {self.session_id} (exit {exit_code})")

    def save(self) -> None:
        """Save current log state to JSON file."""
        try:
            self.logs_dir.mkdir(parents=True, exist_ok=True)
            with open(self.log_file, 'w') as f:
                json.dump(self._to_dict(self.log), f, indent=2)
        except OSError as e:
            print(f"[RUN] Warning: Failed to save log: {e}", file=sys.stderr)

    def write_sidecar(self, output_path: Path) -> Path:
        """Write <output>.meta.json with the run metadata for that payload."""
        sidecar = output_path.with_name(output_path.name + ".meta.json")
        meta = {
            "session_id": self.session_id,
            "command": self.log.command,
            "config": self.log.config,
            "started_at": self.log.started_at,
            "output": str(output_path),
        }
        with open(sidecar, 'w') as f:
            json.dump(meta, f, indent=2)
        return sidecar

    def _to_dict(self, obj) -> Dict[str, Any]:
        """Convert dataclass to dict recursively."""
        if hasattr(obj, '__dataclass_fields__'):
            result = {}
            for field_name in obj.__dataclass_fields__:
                value = getattr(obj, field_name)
                if isinstance(value, list):
                    result[field_name] = [self._to_dict(item) for item in value]
                elif hasattr(value, '__dataclass_fields__'):
                    result[field_name] = self._to_dict(value)
                else:
                    result[field_name] = value
            return result
        return obj


def load_run_log(log_file: Path) -> RunLog:
    """
    Load a run log from JSON file.

    Args:
        log_file: Path to log JSON file

    Returns:
        RunLog object
    """
    with open(log_file) as f:
        data = json.load(f)

    data['steps'] = [StepRecord(**step) for step in data.get('steps', [])]
    return RunLog(**data)


def list_run_logs(logs_dir: Path, command: Optional[str] = None) -> List[Path]:
    """
    List run log files, newest first.

    Args:
        logs_dir: Logs directory
        command: Only keep runs of this subcommand (optional)

    Returns:
        List of log file paths sorted by start time
    """
    if not logs_dir.exists():
        return []

    entries = []
    for log_file in logs_dir.glob("run_*.json"):
        try:
            log = load_run_log(log_file)
        except (OSError, ValueError, TypeError):
            continue
        if command and log.command != command:
            continue
        entries.append((isoparse(log.started_at), log_file))

    entries.sort(key=lambda item: item[0], reverse=True)
    return [path for _, path in entries]

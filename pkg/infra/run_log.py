"""Per-run detail files.

A CLI run owns one folder (see cli.commands); checks append JSON lines to
files named after what they record:

    violations.jsonl  failed verify_space checks (check name + triple)
    oracle.jsonl      constants that disagree with the polynomial oracle
    traces.jsonl      slide paths and round-trip results of `trace`

Nothing is written until set_run_dir() names a folder.
"""

from pathlib import Path
from typing import Any, Dict, Literal, Optional
import json

from .core import safe_file_append


DetailLog = Literal["violations", "oracle", "traces"]

_run_dir: Optional[Path] = None


def set_run_dir(run_dir: Optional[Path]):
    """Route detail files to run_dir; None turns them off."""
    global _run_dir
    _run_dir = run_dir


def write_entry(log_name: DetailLog, entry: Dict[str, Any]) -> bool:
    """Append entry to {run_dir}/{log_name}.jsonl; False when detail logging is off."""
    if _run_dir is None:
        return False
    line = json.dumps(entry, ensure_ascii=False, default=str) + "\n"
    return safe_file_append(_run_dir / f"{log_name}.jsonl", line)

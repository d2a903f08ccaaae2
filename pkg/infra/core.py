"""Common utilities shared across the engine"""

import json
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Optional


# CLI colors
CLI_RED = "\x1B[31m"
CLI_GREEN = "\x1B[32m"
CLI_YELLOW = "\x1B[33m"
CLI_BLUE = "\x1B[34m"
CLI_CLR = "\x1B[0m"


# =============================================================================
# Console logging
# =============================================================================

def log_event(message: str, color: Optional[str] = None) -> None:
    """Print timestamped event to stderr.

    stdout is reserved for command results, so progress and diagnostics
    never mix with structured output.
    """
    ts = datetime.now().strftime("%H:%M:%S")
    if color:
        message = f"{color}{message}{CLI_CLR}"
    print(f"{ts}: {message}", file=sys.stderr)


# =============================================================================
# File operations with retry
# =============================================================================

def safe_file_append(
    file_path: Path | str,
    content: str,
    max_attempts: int = 3,
    delay: float = 0.1
) -> bool:
    """
    Safely append content to file with retry on concurrent access errors.

    Args:
        file_path: Path to file
        content: Content to append
        max_attempts: Maximum number of retry attempts
        delay: Delay in seconds between retries

    Returns:
        True if successful, False otherwise
    """
    file_path = Path(file_path)

    for attempt in range(max_attempts):
        try:
            with open(file_path, "a", encoding="utf-8") as f:
                f.write(content)
            return True
        except OSError as e:
            if attempt < max_attempts - 1:
                time.sleep(delay)
            else:
                log_event(f"Warning: could not append to {file_path} after {max_attempts} attempts: {e}", CLI_YELLOW)
                return False
    return False


def write_json_event(log_file: str | Path | None, event: dict) -> None:
    """
    Write a JSON event to the run log.

    Each event is written as a single line with automatic timestamp.
    Format: comma-separated JSON objects (finalized to array at end).

    Args:
        log_file: Path to log file (None = no-op)
        event: Event dict to write
    """
    if log_file:
        event["_ts"] = datetime.now().isoformat()
        safe_file_append(log_file, json.dumps(event, ensure_ascii=False, default=str) + ",\n")


def finalize_json_array(log_file: str | Path | None) -> None:
    """
    Convert run log from comma-separated objects to a valid JSON array.

    Transforms file content from:
        {"event": 1},
        {"event": 2},
    To:
        [{"event": 1},{"event": 2}]

    Args:
        log_file: Path to log file (None = no-op)
    """
    if not log_file:
        return

    file_path = Path(log_file)
    if not file_path.exists():
        return

    try:
        content = file_path.read_text(encoding="utf-8")
        content = "[" + content.rstrip(",\n \t") + "]"
        file_path.write_text(content, encoding="utf-8")
    except OSError as e:
        log_event(f"Warning: could not finalize {log_file}: {e}", CLI_YELLOW)


# =============================================================================
# Engine errors
# =============================================================================

class EngineError(Exception):
    """Base class for every error raised by the engine."""


class ShapeError(EngineError, ValueError):
    """Raised for malformed or out-of-bounds partitions, shapes and spaces.

    `token` holds the offending piece of input when the error comes from
    parsing a literal.
    """
    def __init__(self, message: str, token: Optional[str] = None):
        self.token = token
        super().__init__(message if token is None else f"{message}: {token!r}")


class SlideError(EngineError, ValueError):
    """Raised when a slide starts from a cell that is not a legal hole."""
    def __init__(self, cell: Any, reason: str):
        self.cell = cell
        self.reason = reason
        super().__init__(f"Illegal hole {cell}: {reason}")


class TransferError(EngineError, ValueError):
    """Raised for invalid input to a Pieri transfer."""


class SpaceMismatch(EngineError, ValueError):
    """Raised when values from different ambient spaces are combined."""
    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"Space mismatch: expected {expected}, got {got}")


class CoefficientError(EngineError, ArithmeticError):
    """Raised when a structure constant cannot be a nonnegative integer."""


class CoefficientOverflow(CoefficientError):
    """Raised when a coefficient leaves the fixed-width integer range."""
    def __init__(self, value: int, limit: int):
        self.value = value
        self.limit = limit
        super().__init__(f"Coefficient {value} exceeds limit {limit}")


class OracleError(EngineError, ArithmeticError):
    """Raised when polynomial coefficient extraction breaks down."""


# =============================================================================
# Utilities
# =============================================================================

def filter_none(d):
    """
    Recursively filter out None values from a dict or list.

    Args:
        d: Dict or list to filter

    Returns:
        New dict/list without None values
    """
    if isinstance(d, dict):
        return {
            k: filter_none(v)
            for k, v in d.items()
            if v is not None
        }
    elif isinstance(d, list):
        return [filter_none(item) for item in d]
    else:
        return d


def check_coefficient(value: int, limit: int) -> int:
    """Return value unchanged, raising CoefficientOverflow above limit."""
    if value > limit or value < -limit:
        raise CoefficientOverflow(value, limit)
    return value

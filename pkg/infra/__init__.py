"""Infrastructure utilities shared across the engine."""

from .core import (
    # Console
    log_event,
    CLI_RED,
    CLI_GREEN,
    CLI_YELLOW,
    CLI_BLUE,
    CLI_CLR,
    # File operations
    safe_file_append,
    write_json_event,
    finalize_json_array,
    # Errors
    EngineError,
    ShapeError,
    SlideError,
    TransferError,
    SpaceMismatch,
    CoefficientError,
    CoefficientOverflow,
    OracleError,
    # Utilities
    filter_none,
    check_coefficient,
)


__all__ = [
    # Console
    "log_event",
    "CLI_RED",
    "CLI_GREEN",
    "CLI_YELLOW",
    "CLI_BLUE",
    "CLI_CLR",
    # File operations
    "safe_file_append",
    "write_json_event",
    "finalize_json_array",
    # Errors
    "EngineError",
    "ShapeError",
    "SlideError",
    "TransferError",
    "SpaceMismatch",
    "CoefficientError",
    "CoefficientOverflow",
    "OracleError",
    # Utilities
    "filter_none",
    "check_coefficient",
]

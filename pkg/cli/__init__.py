"""
CLI package.

- commands: argument grammar, subcommand handlers, run()
- records: CoefficientRecord and table dump I/O
"""

from .commands import UsageError, build_parser, run
from .records import CoefficientRecord, iter_table, read_table, write_table


__all__ = [
    # Entry point
    "run", "build_parser", "UsageError",
    # Records
    "CoefficientRecord", "iter_table", "read_table", "write_table",
]

#!/usr/bin/env python
"""
Statistics for a dumped structure-constant table.

Usage:
    python scripts/table_stats.py <table.jsonl>
    python scripts/table_stats.py logs/tables/B-n4.jsonl

Output:
    Formatted report: records, nonzero constants, largest constant,
    per-weight counts and the most frequent constant values.
"""

import sys
from collections import Counter, defaultdict
from pathlib import Path
from typing import List

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli import CoefficientRecord, read_table
from infra import EngineError


def collect_stats(records: List[CoefficientRecord]) -> dict:
    spaces = Counter(r.space for r in records)
    nonzero = [r for r in records if r.coeff]
    by_weight = defaultdict(lambda: {"records": 0, "nonzero": 0, "sum": 0})
    for r in records:
        w = sum(r.nu)
        by_weight[w]["records"] += 1
        if r.coeff:
            by_weight[w]["nonzero"] += 1
            by_weight[w]["sum"] += r.coeff

    largest = max(nonzero, key=lambda r: r.coeff, default=None)
    return {
        "spaces": dict(spaces),
        "records": len(records),
        "nonzero": len(nonzero),
        "largest": largest,
        "values": Counter(r.coeff for r in nonzero),
        "by_weight": dict(sorted(by_weight.items())),
    }


def fmt_partition(parts: list) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def print_report(stats: dict, table_name: str):
    print(f"\n{'='*50}")
    print(f"TABLE: {table_name}")
    print(f"{'='*50}")
    print()

    spaces = ", ".join(f"{s} ({n})" for s, n in stats["spaces"].items())
    print(f"Spaces: {spaces or '-'}")
    print(f"Records: {stats['records']}  Nonzero: {stats['nonzero']}")

    largest = stats["largest"]
    if largest:
        print(f"Largest: {largest.coeff} at "
              f"{fmt_partition(largest.lambda_)} * {fmt_partition(largest.mu)} -> {fmt_partition(largest.nu)}")

    print(f"\n{'|nu|':>6} {'Records':>8} {'Nonzero':>8} {'Sum':>8}")
    print("-" * 33)
    for w, row in stats["by_weight"].items():
        print(f"{w:>6} {row['records']:>8} {row['nonzero']:>8} {row['sum']:>8}")

    print(f"\nTop 5 values:")
    print(f"{'Value':>8} {'Count':>8}")
    print("-" * 17)
    for value, count in stats["values"].most_common(5):
        print(f"{value:>8} {count:>8}")


def main():
    if len(sys.argv) < 2:
        print("Usage: python scripts/table_stats.py <table.jsonl>")
        print("Example: python scripts/table_stats.py logs/tables/B-n4.jsonl")
        sys.exit(1)

    table_path = Path(sys.argv[1])

    if not table_path.exists():
        print(f"Error: {table_path} not found")
        sys.exit(1)

    try:
        records = read_table(table_path)
    except EngineError as e:
        print(f"Error: {e}")
        sys.exit(1)

    print_report(collect_stats(records), table_path.name)


if __name__ == "__main__":
    main()

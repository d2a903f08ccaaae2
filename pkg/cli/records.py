"""Structured output records and table dump I/O."""

import json
from pathlib import Path
from typing import IO, Iterable, Iterator, List

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from combinatorics import Partition
from infra import ShapeError


class CoefficientRecord(BaseModel):
    """One structure constant; serialised with fields exactly {space, lambda, mu, nu, coeff}."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    space: str
    lambda_: List[int] = Field(alias="lambda")
    mu: List[int]
    nu: List[int]
    coeff: int

    @classmethod
    def of(cls, space: str, lam: Partition, mu: Partition, nu: Partition, coeff: int) -> "CoefficientRecord":
        return cls(space=space, lambda_=list(lam), mu=list(mu), nu=list(nu), coeff=coeff)

    def to_line(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_line(cls, line: str) -> "CoefficientRecord":
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise ShapeError("Invalid table line", line.strip()) from e
        if not isinstance(data, dict) or set(data) != {"space", "lambda", "mu", "nu", "coeff"}:
            raise ShapeError("Table record needs fields space, lambda, mu, nu, coeff", line.strip())
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ShapeError("Invalid table record", line.strip()) from e


def iter_table(path: Path | str) -> Iterator[CoefficientRecord]:
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if line.strip():
                yield CoefficientRecord.from_line(line)


def read_table(path: Path | str) -> List[CoefficientRecord]:
    """Read a table dumped by `table --format jsonl`."""
    return list(iter_table(path))


def write_table(records: Iterable[CoefficientRecord], stream: IO[str]) -> int:
    """Write records one per line; returns the number written."""
    count = 0
    for record in records:
        stream.write(record.to_line() + "\n")
        count += 1
    return count

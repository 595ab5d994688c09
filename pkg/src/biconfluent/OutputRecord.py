from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Literal, Sequence, cast

import databind.json

__all__ = ["SCHEMA_VERSION", "OutputRecord"]

#: Version of the layout of the records written by the command line.
SCHEMA_VERSION = "1"

Format = Literal["csv", "json"]


def _format_float(value: float) -> str:
    return "%.17g" % value


@dataclass(frozen=True)
class OutputRecord:
    """
    A table of plot-ready numbers produced by one command. Every row has one finite value per column.

    >>> print(OutputRecord("spectrum", ["index", "energy"], [[1.0, -0.5]]).to_csv(), end="")
    # schema_version=1 command=spectrum
    index,energy
    1,-0.5
    """

    class Error(Exception):
        pass

    @dataclass
    class RaggedRow(Error):
        index: int
        expected: int
        actual: int

        def __str__(self) -> str:
            return f"row {self.index} has {self.actual} values, expected one per column ({self.expected})"

    @dataclass
    class NonFinite(Error):
        index: int
        column: str

        def __str__(self) -> str:
            return f"row {self.index} has a non-finite value in column {self.column!r}"

    command: str
    columns: list[str]
    rows: list[list[float]] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self) -> None:
        for index, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise self.RaggedRow(index, len(self.columns), len(row))
            for column, value in zip(self.columns, row):
                if not math.isfinite(value):
                    raise self.NonFinite(index, column)

    @classmethod
    def of(cls, command: str, columns: Sequence[str], rows: Sequence[Sequence[float]]) -> OutputRecord:
        return cls(command, list(columns), [[float(x) for x in row] for row in rows])

    def to_csv(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# schema_version={self.schema_version} command={self.command}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_format_float(x) for x in row])
        return buffer.getvalue()

    def to_json(self) -> str:
        payload = databind.json.dump(self, OutputRecord)
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cast(OutputRecord, databind.json.load(json.loads(text), OutputRecord))

    def render(self, format: Format) -> str:
        if format == "json":
            return self.to_json()
        return self.to_csv()

    def column(self, name: str) -> list[float]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

"""Uniform report records and their text / json / csv rendering.

Every verification produces a flat list of records with the same six
fields, so one renderer serves all subcommands.  Numbers are written
with repr, which round-trips float64 exactly; output carries no
timestamps or environment data, so identical runs give identical bytes.
"""

import json
from dataclasses import dataclass

from .errors import ArgumentRangeError

FORMATS = ("text", "json", "csv")
CSV_HEADER = "op,n,inputs,value,bound,pass"


@dataclass(frozen=True)
class Record:
    op: str
    n: int | None
    inputs: str
    value: float | int | str | None
    bound: float | str | None
    passed: bool | None

    def as_dict(self) -> dict:
        return {
            "op": self.op,
            "n": self.n,
            "inputs": self.inputs,
            "value": self.value,
            "bound": self.bound,
            "pass": self.passed,
        }


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_json(records: list[Record]) -> str:
    return json.dumps([rec.as_dict() for rec in records], indent=2) + "\n"


def to_csv(records: list[Record]) -> str:
    lines = [CSV_HEADER]
    for rec in records:
        cells = [rec.op, rec.n, rec.inputs, rec.value, rec.bound, rec.passed]
        lines.append(",".join(_cell(c) for c in cells))
    return "\n".join(lines) + "\n"


def to_table(records: list[Record]) -> str:
    headers = ["op", "n", "inputs", "value", "bound", "pass"]
    rows = [
        [_cell(rec.op), _cell(rec.n), _cell(rec.inputs), _cell(rec.value), _cell(rec.bound), _cell(rec.passed)]
        for rec in records
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def render(records: list[Record], fmt: str) -> str:
    if fmt == "json":
        return to_json(records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "text":
        return to_table(records)
    raise ArgumentRangeError(f"unknown format {fmt!r}")

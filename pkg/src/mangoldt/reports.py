"""Deterministic CSV/JSON emission for sweep reports.

One schema, two encodings: a report is a list of dicts sharing a fixed column
tuple.  Floats are printed with 9 significant digits, '.' decimal separator,
no locale; lines end with LF; files are UTF-8.  Identical rows therefore
serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path


def format_value(v) -> str:
    if isinstance(v, bool):
        raise TypeError("boolean report values are not part of any schema")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if v == 0.0:
            v = 0.0  # normalize -0.0
        return format(v, ".9g")
    if isinstance(v, str):
        if "," in v or "\n" in v:
            raise ValueError(f"report strings must be comma-free, got {v!r}")
        return v
    raise TypeError(f"unsupported report value {v!r}")


def rows_to_csv(rows: list[dict], columns: tuple[str, ...]) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(format_value(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[dict], columns: tuple[str, ...]) -> str:
    # mirror the CSV: same field names, same 9-significant-digit floats
    def encode(v):
        if isinstance(v, float):
            return float(format_value(v))
        return v

    payload = [{c: encode(row[c]) for c in columns} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def render(rows: list[dict], columns: tuple[str, ...], fmt: str) -> str:
    if fmt == "csv":
        return rows_to_csv(rows, columns)
    if fmt == "json":
        return rows_to_json(rows, columns)
    raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def write_report(path: str | Path, text: str) -> None:
    Path(path).write_bytes(text.encode("utf-8"))

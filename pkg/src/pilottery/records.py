"""Line-delimited, schema-versioned record streams.

A stream is a `#schema` line, an optional `#config` echo of the resolved
run configuration, a tab-separated header row, then data rows. Output is
byte-identical across runs with equal configuration and seed.
"""

from __future__ import annotations

from typing import Iterable, Optional


def render_records(record_type: str, columns: list[str],
                   rows: Iterable[Iterable], version: int = 1,
                   config_json: Optional[str] = None) -> str:
    lines = [f"#schema pilottery.{record_type}/v{version}"]
    if config_json is not None:
        lines.append(f"#config {config_json}")
    lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_records(text: str) -> tuple[str, list[dict]]:
    """Inverse of render_records; returns (schema, row dicts)."""
    schema = None
    columns = None
    rows = []
    for line in text.splitlines():
        if line.startswith("#schema "):
            schema = line[len("#schema "):]
            continue
        if line.startswith("#") or not line:
            continue
        if columns is None:
            columns = line.split("\t")
            continue
        rows.append(dict(zip(columns, line.split("\t"))))
    if schema is None or columns is None:
        raise ValueError("not a record stream")
    return schema, rows

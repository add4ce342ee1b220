"""CSV encoding of sweep records."""

from __future__ import annotations

import csv
import io
from dataclasses import fields

from .optimize import SweepRecord

COMPARE_COLUMNS = ("D", "b_qaoa1", "b_qaoa2", "b_thr1", "b_thr2")

_TYPES = {f.name: f.type for f in fields(SweepRecord)}


def format_number(value) -> str:
    """Shortest decimal with at most 12 significant digits; empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _parse(name: str, text: str):
    if text == "":
        return None
    kind = _TYPES[name]
    if "bool" in kind:
        return text == "true"
    if "int" in kind:
        return int(text)
    if "float" in kind:
        return float(text)
    return text


def records_to_csv(records, columns=None) -> str:
    columns = list(columns or SweepRecord.field_names())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([format_number(getattr(rec, c)) for c in columns])
    return buf.getvalue()


def records_from_csv(text: str) -> list[SweepRecord]:
    reader = csv.DictReader(io.StringIO(text))
    return [SweepRecord(**{k: _parse(k, v) for k, v in row.items()}) for row in reader]

"""Parsing of timestamped edge lists from delimited text and JSON lines.

Each row is one (source, target, timestamp) interaction; a weight column is
parsed when mapped but the calculus ignores it. Malformed rows are skipped
and recorded, never silently dropped; more than half malformed is treated as
a misconfiguration and fails hard.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from typing import IO, Iterable

from .errors import ConfigurationError, IngestError
from .windows import TemporalEvent

TIMESTAMP_FORMATS = ("epoch_seconds", "epoch_millis", "iso8601")

DEFAULT_COLUMNS = {"source": "source", "target": "target", "timestamp": "timestamp"}


@dataclass(frozen=True)
class IngestConfig:
    format: str = "csv"
    delimiter: str = ","
    columns: dict[str, str | int] = field(default_factory=lambda: dict(DEFAULT_COLUMNS))
    timestamp_format: str = "epoch_seconds"
    casefold_ids: bool = False
    has_header: bool = True
    default_utc_offset: int = 0  # applied to iso8601 timestamps lacking an offset

    def __post_init__(self):
        if self.format not in ("csv", "jsonl"):
            raise ConfigurationError(f"unknown input format: {self.format!r}")
        if len(self.delimiter) != 1:
            raise ConfigurationError("delimiter must be a single character")
        if self.timestamp_format not in TIMESTAMP_FORMATS:
            raise ConfigurationError(
                f"unknown timestamp format: {self.timestamp_format!r}"
            )
        missing = [r for r in ("source", "target", "timestamp") if r not in self.columns]
        if missing:
            raise ConfigurationError(f"unmapped column roles: {', '.join(missing)}")


@dataclass
class IngestDiagnostics:
    rows_read: int = 0
    rows_accepted: int = 0
    self_loops_seen: int = 0
    malformed: list[tuple[int, str]] = field(default_factory=list)


def _parse_timestamp(raw: str, fmt: str, default_utc_offset: int) -> int:
    raw = raw.strip()
    if fmt == "epoch_seconds":
        return int(float(raw))
    if fmt == "epoch_millis":
        return int(float(raw)) // 1000
    text = raw.replace("Z", "+00:00") if raw.endswith("Z") else raw
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone(timedelta(seconds=default_utc_offset)))
    return int(dt.timestamp())


def _normalize_id(raw: str, casefold: bool, role: str) -> str:
    value = raw.strip()
    if not value:
        raise ValueError(f"empty {role}")
    return value.casefold() if casefold else value


def _iter_rows_csv(lines: Iterable[str], config: IngestConfig):
    """Yield (line_number, {role: raw value}) per data row."""
    reader = csv.reader(lines, delimiter=config.delimiter)
    positions: dict[str, int] | None = None
    header_consumed = False
    lineno = 0
    for row in reader:
        lineno += 1
        if config.has_header and not header_consumed:
            header_consumed = True
            header = [h.strip() for h in row]
            positions = {}
            for role, col in config.columns.items():
                if isinstance(col, int):
                    positions[role] = col
                elif col in header:
                    positions[role] = header.index(col)
                elif role == "weight":
                    continue
                else:
                    raise IngestError(f"missing column {col!r} for role {role!r}")
            continue
        if positions is None:
            positions = {
                role: (col if isinstance(col, int) else None)
                for role, col in config.columns.items()
            }
            bad = [r for r, p in positions.items() if p is None]
            if bad:
                raise IngestError(
                    "headerless input needs positional columns for roles: "
                    + ", ".join(bad)
                )
        fields = {}
        for role, pos in positions.items():
            fields[role] = row[pos] if pos is not None and pos < len(row) else None
        yield lineno, fields


def _iter_rows_jsonl(lines: Iterable[str], config: IngestConfig):
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            yield lineno, {"__error__": f"invalid json: {exc.msg}"}
            continue
        fields = {}
        for role, col in config.columns.items():
            value = obj.get(str(col))
            fields[role] = None if value is None else str(value)
        yield lineno, fields


def parse_edge_list(
    stream: IO, config: IngestConfig
) -> tuple[list[TemporalEvent], IngestDiagnostics]:
    """Parse a byte or text stream into events plus diagnostics.

    Events come back in input order (slicing is order-independent),
    timestamps normalised to epoch seconds UTC. Self-loop rows are kept as
    events and counted; the graph builder drops them later.
    """
    if isinstance(stream, (bytes, bytearray)):
        stream = io.StringIO(stream.decode("utf-8"))
    elif hasattr(stream, "read") and isinstance(stream.read(0), bytes):
        stream = io.TextIOWrapper(stream, encoding="utf-8")
    diags = IngestDiagnostics()
    events: list[TemporalEvent] = []
    rows = (_iter_rows_csv if config.format == "csv" else _iter_rows_jsonl)(
        stream, config
    )
    for lineno, fields in rows:
        diags.rows_read += 1
        if "__error__" in fields:
            diags.malformed.append((lineno, fields["__error__"]))
            continue
        try:
            for role in ("source", "target", "timestamp"):
                if fields.get(role) is None:
                    raise ValueError(f"missing {role}")
            source = _normalize_id(fields["source"], config.casefold_ids, "source")
            target = _normalize_id(fields["target"], config.casefold_ids, "target")
            ts = _parse_timestamp(
                fields["timestamp"], config.timestamp_format,
                config.default_utc_offset,
            )
            weight = None
            raw_weight = fields.get("weight")
            if raw_weight is not None and str(raw_weight).strip():
                weight = float(raw_weight)
                if weight <= 0:
                    raise ValueError("weight must be positive")
        except ValueError as exc:
            diags.malformed.append((lineno, str(exc)))
            continue
        if source == target:
            diags.self_loops_seen += 1
        events.append(TemporalEvent(source, target, ts, weight))
        diags.rows_accepted += 1
    if diags.rows_read and len(diags.malformed) * 2 > diags.rows_read:
        raise IngestError(
            f"{len(diags.malformed)} of {diags.rows_read} rows malformed; "
            "input format is probably misconfigured"
        )
    return events, diags


def validate(events: list[TemporalEvent]) -> list[TemporalEvent]:
    """Assert the event list is analyzable; returns it unchanged."""
    if not events:
        raise IngestError("no events to analyze")
    return events


def to_canonical_csv(events: Iterable[TemporalEvent]) -> str:
    """Canonical serialisation: `source,target,timestamp` with header."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["source", "target", "timestamp"])
    for e in events:
        writer.writerow([e.source, e.target, e.timestamp])
    return out.getvalue()

"""Full analysis runs and report emission.

``run_compute`` chains ingest -> slice -> per-network centralities ->
dynamicity and assembles a report whose metadata echoes every defaulted
decision, so two runs with the same input bytes and config are
byte-identical. Numbers are serialised at 12 significant digits; undefined
per-window values appear as null (json), empty cell (csv) or "undef" (text).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .centrality import MetricSpec, compute_metric
from .dynamicity import (
    DDN_MODES,
    EQ6_LITERAL,
    MEAN_DDA,
    ActorDynamicity,
    NetworkDynamicity,
    ObservedValues,
    WindowDynamicity,
    actor_dynamicity,
    actor_window_dynamicity,
    network_dynamicity,
    rank_actors,
    window_dynamicity,
)
from .errors import ConfigurationError
from .graph import DIRECTED, UNDIRECTED, node_count
from .ingest import IngestConfig, parse_edge_list, validate
from .windows import (
    AlphaWeights,
    PresenceMatrix,
    SlicedNetwork,
    WindowPlan,
    alpha_weights,
    presence_matrix,
    slice_events,
)

SECTIONS = ("actors", "windows", "network", "matrix")


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    ingest: IngestConfig = field(default_factory=IngestConfig)
    window: WindowPlan = field(default_factory=lambda: WindowPlan("calendar", unit="month"))
    directed: bool = False
    metrics: tuple[MetricSpec, ...] = ()
    ddn_mode: str = EQ6_LITERAL
    top_k: int = 5
    output_format: str = "text"
    out_path: str | None = None

    def __post_init__(self):
        if not self.metrics:
            raise ConfigurationError("at least one metric is required")
        if self.top_k < 1:
            raise ConfigurationError("top-k must be >= 1")
        if self.ddn_mode not in DDN_MODES:
            raise ConfigurationError(f"unknown ddn mode: {self.ddn_mode!r}")
        if self.output_format not in ("csv", "json", "text"):
            raise ConfigurationError(f"unknown output format: {self.output_format!r}")


@dataclass(frozen=True)
class MetricReport:
    metric: MetricSpec
    top: list[tuple[str, float]]
    actor: ActorDynamicity
    windows: WindowDynamicity
    network: dict[str, NetworkDynamicity]  # both ddn modes
    matrix: dict[str, tuple[float, ...]]


@dataclass(frozen=True)
class DynamicityReport:
    metadata: dict
    metrics: tuple[MetricReport, ...]


def fmt12(value: float) -> str:
    return format(value, ".12g")


def _round12(value: float) -> float:
    return float(fmt12(value))


def analyze_metric(
    sliced: SlicedNetwork,
    presence: PresenceMatrix,
    alpha: AlphaWeights,
    spec: MetricSpec,
    top_k: int,
) -> MetricReport:
    """All dynamicity measures for one metric over one sliced network."""
    n = node_count(sliced.aggregated)
    obs = ObservedValues(
        aggregated=compute_metric(sliced.aggregated, spec, aggregated_n=n),
        per_window=tuple(
            compute_metric(sin.graph, spec, aggregated_n=n) for sin in sliced.sins
        ),
    )
    actor = actor_dynamicity(obs, alpha)
    return MetricReport(
        metric=spec,
        top=rank_actors(actor, top_k),
        actor=actor,
        windows=window_dynamicity(obs, alpha, presence),
        network={mode: network_dynamicity(actor, n, mode) for mode in DDN_MODES},
        matrix=actor_window_dynamicity(obs, alpha),
    )


def run_compute(config: RunConfig) -> DynamicityReport:
    with open(config.input_path, "rb") as fh:
        events, diags = parse_edge_list(fh, config.ingest)
    events = validate(events)
    mode = DIRECTED if config.directed else UNDIRECTED
    sliced = slice_events(events, config.window, mode)
    presence = presence_matrix(sliced)
    alpha = alpha_weights(presence)
    reports = tuple(
        analyze_metric(sliced, presence, alpha, spec, config.top_k)
        for spec in config.metrics
    )
    metadata = {
        "tool": "netdyn",
        "version": __version__,
        "input": str(config.input_path),
        "directed": config.directed,
        "window_plan": config.window.describe(),
        "timestamp_format": config.ingest.timestamp_format,
        "casefold_ids": config.ingest.casefold_ids,
        "metrics": [spec.kind for spec in config.metrics],
        "closeness_variant": config.metrics[0].closeness_variant,
        "normalization_base": config.metrics[0].normalization_base,
        "ddn_mode": config.ddn_mode,
        "top_k": config.top_k,
        "n": node_count(sliced.aggregated),
        "m": sliced.m,
        "windows": [
            {
                "index": sin.index,
                "start": sin.start,
                "end": sin.end,
                "events": sin.event_count,
                "actors": len(presence.window_actors(sin.index)),
            }
            for sin in sliced.sins
        ],
        "ingest": {
            "rows_read": diags.rows_read,
            "rows_accepted": diags.rows_accepted,
            "self_loops_seen": diags.self_loops_seen,
            "malformed": len(diags.malformed),
        },
    }
    return DynamicityReport(metadata=metadata, metrics=reports)


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------


def report_to_dict(report: DynamicityReport) -> dict:
    """JSON-ready dict; every float rounded to 12 significant digits."""
    out = {"metadata": report.metadata, "metrics": {}}
    for mr in report.metrics:
        windows = [
            {
                "window": j,
                "w": mr.windows.w[j],
                "ddn_sin": None if v is None else _round12(v),
            }
            for j, v in sorted(mr.windows.per_window.items())
        ]
        out["metrics"][mr.metric.kind] = {
            "top_actors": [
                {"rank": i + 1, "actor_id": a, "dda": _round12(v)}
                for i, (a, v) in enumerate(mr.top)
            ],
            "dda": {a: _round12(v) for a, v in sorted(mr.actor.dda.items())},
            "dda_star": _round12(mr.actor.dda_star),
            "contributions": {
                a: _round12(v)
                for a, v in sorted(mr.network[EQ6_LITERAL].contributions.items())
            },
            "windows": windows,
            "network": {
                mode: _round12(nd.ddn) for mode, nd in sorted(mr.network.items())
            },
            "actor_window_matrix": {
                a: [_round12(v) for v in row] for a, row in sorted(mr.matrix.items())
            },
        }
    return out


def _text_top_table(report: DynamicityReport, k: int) -> list[str]:
    col_w = 26
    metrics = [mr.metric.kind for mr in report.metrics]
    lines = [f"Top-{k} actors by dynamicity (dda)"]
    lines.append("rank  " + "".join(m.ljust(col_w) for m in metrics))
    lines.append("      " + "".join("actor_id  dda".ljust(col_w) for _ in metrics))
    depth = max((len(mr.top) for mr in report.metrics), default=0)
    for i in range(min(k, depth)):
        cells = []
        for mr in report.metrics:
            if i < len(mr.top):
                a, v = mr.top[i]
                cells.append(f"{a}  {fmt12(v)}".ljust(col_w))
            else:
                cells.append("".ljust(col_w))
        lines.append(f"{i + 1:<4}  " + "".join(cells))
    return lines


def _text_window_table(report: DynamicityReport) -> list[str]:
    metrics = [mr.metric.kind for mr in report.metrics]
    lines = ["Window dynamicity (ddn_sin)"]
    lines.append(
        "window  w       " + "".join(m.ljust(20) for m in metrics)
    )
    m_count = report.metadata["m"]
    w_by_window = report.metrics[0].windows.w
    for j in range(1, m_count + 1):
        cells = []
        for mr in report.metrics:
            v = mr.windows.per_window[j]
            cells.append(("undef" if v is None else fmt12(v)).ljust(20))
        lines.append(f"{j:<6}  {w_by_window[j]:<6}  " + "".join(cells))
    return lines


def _text_network_table(report: DynamicityReport, mode: str) -> list[str]:
    lines = [f"Network dynamicity (ddn, mode={mode})"]
    lines.append("metric       eq6_literal         mean_dda")
    for mr in report.metrics:
        lines.append(
            f"{mr.metric.kind:<11}  "
            f"{fmt12(mr.network[EQ6_LITERAL].ddn):<18}  "
            f"{fmt12(mr.network[MEAN_DDA].ddn)}"
        )
    return lines


def _text_matrix_table(report: DynamicityReport) -> list[str]:
    lines = []
    m_count = report.metadata["m"]
    for mr in report.metrics:
        lines.append(f"Actor-window dynamicity matrix ({mr.metric.kind})")
        lines.append(
            "actor_id    " + "".join(f"window_{j}".ljust(18) for j in range(1, m_count + 1))
        )
        for actor, row in sorted(mr.matrix.items()):
            lines.append(
                f"{actor:<10}  " + "".join(fmt12(v).ljust(18) for v in row)
            )
        lines.append("")
    if lines and not lines[-1]:
        lines.pop()
    return lines


def render_text(report: DynamicityReport, sections: tuple[str, ...] = SECTIONS) -> str:
    md = report.metadata
    header = [
        "netdyn dynamicity report",
        "========================",
        f"input: {md['input']}",
        f"actors (n): {md['n']}   windows (m): {md['m']}   "
        f"directed: {'yes' if md['directed'] else 'no'}",
        f"window plan: {md['window_plan']}",
        f"closeness: {md['closeness_variant']}   "
        f"normalization: {md['normalization_base']}   "
        f"ddn mode: {md['ddn_mode']}",
        "",
        "window  start        end          events   actors",
    ]
    for w in md["windows"]:
        header.append(
            f"{w['index']:<6}  {w['start']:<11}  {w['end']:<11}  "
            f"{w['events']:<7}  {w['actors']}"
        )
    blocks = [header]
    if "actors" in sections:
        blocks.append(_text_top_table(report, md["top_k"]))
    if "windows" in sections:
        blocks.append(_text_window_table(report))
    if "network" in sections:
        blocks.append(_text_network_table(report, md["ddn_mode"]))
    if "matrix" in sections:
        blocks.append(_text_matrix_table(report))
    return "\n\n".join(
        "\n".join(line.rstrip() for line in b) for b in blocks
    ) + "\n"


def _csv_tables(report: DynamicityReport, sections: tuple[str, ...]) -> dict[str, str]:
    """One CSV document per table, keyed by file name."""
    tables: dict[str, str] = {}

    def write(name: str, header: list[str], rows: list[list]) -> None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        tables[name] = buf.getvalue()

    m_count = report.metadata["m"]
    if "actors" in sections:
        for mr in report.metrics:
            write(
                f"top_actors_{mr.metric.kind}.csv",
                ["rank", "actor_id", "dda"],
                [[i + 1, a, fmt12(v)] for i, (a, v) in enumerate(mr.top)],
            )
            write(
                f"dda_{mr.metric.kind}.csv",
                ["actor_id", "dda", "contribution"],
                [
                    [a, fmt12(v), fmt12(mr.network[EQ6_LITERAL].contributions[a])]
                    for a, v in sorted(mr.actor.dda.items())
                ],
            )
    if "windows" in sections:
        header = ["window", "start", "end", "w"] + [
            mr.metric.kind for mr in report.metrics
        ]
        rows = []
        for w in report.metadata["windows"]:
            j = w["index"]
            row = [j, w["start"], w["end"], w["actors"]]
            for mr in report.metrics:
                v = mr.windows.per_window[j]
                row.append("" if v is None else fmt12(v))
            rows.append(row)
        write("window_dynamicity.csv", header, rows)
    if "network" in sections:
        write(
            "network_dynamicity.csv",
            ["metric", "ddn_eq6_literal", "ddn_mean_dda"],
            [
                [mr.metric.kind, fmt12(mr.network[EQ6_LITERAL].ddn),
                 fmt12(mr.network[MEAN_DDA].ddn)]
                for mr in report.metrics
            ],
        )
    if "matrix" in sections:
        for mr in report.metrics:
            write(
                f"matrix_{mr.metric.kind}.csv",
                ["actor_id"] + [f"window_{j}" for j in range(1, m_count + 1)],
                [[a] + [fmt12(v) for v in row] for a, row in sorted(mr.matrix.items())],
            )
    return tables


def emit_report(
    report: DynamicityReport,
    output_format: str,
    destination: str | None = None,
    sections: tuple[str, ...] = SECTIONS,
    stream=None,
) -> None:
    """Write the report as text, json, or csv.

    For csv with a destination, the destination is a directory receiving one
    file per table; without one, tables go to the stream separated by
    ``# file: <name>`` lines.
    """
    stream = stream or sys.stdout
    if output_format == "json":
        payload = json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"
        _write(payload, destination, stream)
    elif output_format == "text":
        _write(render_text(report, sections), destination, stream)
    else:
        tables = _csv_tables(report, sections)
        if destination is None:
            chunks = [f"# file: {name}\n{body}" for name, body in sorted(tables.items())]
            stream.write("\n".join(chunks))
        else:
            directory = Path(destination)
            try:
                directory.mkdir(parents=True, exist_ok=True)
                for name, body in sorted(tables.items()):
                    (directory / name).write_text(body, encoding="utf-8")
            except OSError as exc:
                raise ConfigurationError(
                    f"cannot write report to {destination!r}: {exc}"
                ) from exc


def _write(payload: str, destination: str | None, stream) -> None:
    if destination is None:
        stream.write(payload)
        return
    try:
        Path(destination).write_text(payload, encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot write report to {destination!r}: {exc}") from exc


"""Command-line front end.

Subcommands: ``compute`` (full report), ``actors`` (top-k only), ``windows``
(per-window only), ``network`` (network-level only), ``matrix``
(actor-by-window dynamicity).

Exit codes: 0 success, 2 usage/configuration error, 3 ingest or window
coverage failure, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .centrality import HARMONIC, PER_NETWORK, AGGREGATED_N, WF_CORRECTED, metric_from_name
from .dynamicity import EQ6_LITERAL, MEAN_DDA
from .errors import (
    ConfigurationError,
    ConsistencyError,
    IngestError,
    WindowCoverageError,
)
from .ingest import IngestConfig
from .report import RunConfig, emit_report, run_compute
from .windows import WindowPlan

SECTION_BY_COMMAND = {
    "compute": ("actors", "windows", "network"),
    "actors": ("actors",),
    "windows": ("windows",),
    "network": ("network",),
    "matrix": ("matrix",),
}


def _parse_tz_offset(raw: str) -> int:
    """Accept seconds ('19800', '-3600') or '+HH:MM' / '-HH:MM'."""
    raw = raw.strip()
    if ":" in raw:
        sign = -1 if raw.startswith("-") else 1
        body = raw.lstrip("+-")
        try:
            hours, minutes = body.split(":")
            return sign * (int(hours) * 3600 + int(minutes) * 60)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad timezone offset: {raw!r}")
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad timezone offset: {raw!r}")


def _parse_columns(raw: str) -> dict[str, str | int]:
    """Parse 'source=from,target=to,timestamp=ts[,weight=w]'; all-numeric
    values are treated as 0-based positions."""
    columns: dict[str, str | int] = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise argparse.ArgumentTypeError(
                f"bad column mapping {part!r}; expected role=name_or_position"
            )
        role, _, value = part.partition("=")
        role = role.strip()
        if role not in ("source", "target", "timestamp", "weight"):
            raise argparse.ArgumentTypeError(f"unknown column role: {role!r}")
        value = value.strip()
        columns[role] = int(value) if value.lstrip("-").isdigit() else value
    return columns


def _window_plan(spec: str, tz_offset: int, origin: int) -> WindowPlan:
    spec = spec.strip()
    if spec in ("day", "week", "month"):
        return WindowPlan("calendar", unit=spec, tz_offset=tz_offset)
    if spec.startswith("fixed:"):
        try:
            length = int(spec.split(":", 1)[1])
        except ValueError:
            raise ConfigurationError(f"bad fixed window length in {spec!r}")
        return WindowPlan("fixed", length=length, origin=origin)
    if spec.startswith("bounds:"):
        path = spec.split(":", 1)[1]
        try:
            text = open(path, encoding="utf-8").read()
        except OSError as exc:
            raise ConfigurationError(f"cannot read bounds file {path!r}: {exc}")
        try:
            boundaries = tuple(int(tok) for tok in text.split())
        except ValueError:
            raise ConfigurationError(f"bounds file {path!r} must hold integers")
        return WindowPlan("explicit", boundaries=boundaries)
    raise ConfigurationError(
        f"unknown window spec {spec!r}; expected month|week|day|fixed:<seconds>|bounds:<file>"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("input")
    g.add_argument("--input", required=True, help="path to the edge-list file")
    g.add_argument("--format", choices=("csv", "jsonl"), default="csv",
                   help="input format (default csv)")
    g.add_argument("--delimiter", default=",",
                   help="csv field delimiter (default ',')")
    g.add_argument("--columns", type=_parse_columns,
                   default={"source": "source", "target": "target",
                            "timestamp": "timestamp"},
                   help="role=column mapping, e.g. source=from,target=to,"
                        "timestamp=ts; numeric values are 0-based positions")
    g.add_argument("--no-header", action="store_true",
                   help="csv input has no header row (columns must be positional)")
    g.add_argument("--timestamp-format",
                   choices=("epoch_seconds", "epoch_millis", "iso8601"),
                   default="epoch_seconds",
                   help="timestamp encoding (default epoch_seconds; iso8601 "
                        "without an offset is read as UTC)")
    g.add_argument("--casefold-ids", action="store_true",
                   help="case-fold actor identities (e.g. email addresses)")
    g = common.add_argument_group("windows")
    g.add_argument("--window", default="month",
                   help="month|week|day|fixed:<seconds>|bounds:<file> "
                        "(default month)")
    g.add_argument("--tz-offset", type=_parse_tz_offset, default=0,
                   help="fixed UTC offset for calendar windows, seconds or "
                        "+HH:MM (default UTC)")
    g.add_argument("--window-origin", type=int, default=0,
                   help="epoch-seconds origin for fixed windows (default 0)")
    g = common.add_argument_group("analysis")
    g.add_argument("--directed", action="store_true",
                   help="treat interactions as directed (default undirected)")
    g.add_argument("--metrics", default="degree",
                   help="comma-separated: degree,in_degree,out_degree,"
                        "closeness,betweenness (default degree)")
    g.add_argument("--closeness", choices=("harmonic", "wf"), default="harmonic",
                   help="closeness variant on disconnected graphs: harmonic "
                        "(default) or Wasserman-Faust-corrected classic")
    g.add_argument("--norm-base", choices=("per-network", "aggregated"),
                   default="per-network",
                   help="normalize each network by its own size (default) or "
                        "by the aggregated actor count")
    g.add_argument("--ddn-mode", choices=("eq6", "mean"), default="eq6",
                   help="network-level mode: eq6 (contribution sum; a fully "
                        "static network scores 1.0) or mean (mean of actor "
                        "dynamicities)")
    g.add_argument("--top", type=int, default=5, metavar="K",
                   help="ranking depth (default 5)")
    g = common.add_argument_group("output")
    g.add_argument("--out", default=None,
                   help="output path (csv: a directory, one file per table); "
                        "default stdout")
    g.add_argument("--output-format", choices=("csv", "json", "text"),
                   default="text", help="report format (default text)")

    parser = argparse.ArgumentParser(
        prog="netdyn",
        description="Quantify the dynamicity of a longitudinal social network.",
    )
    parser.add_argument("--version", action="version",
                        version=f"netdyn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common],
                   help="full report: rankings, per-window, network level")
    sub.add_parser("actors", parents=[common], help="top-k actor ranking only")
    sub.add_parser("windows", parents=[common], help="per-window dynamicity only")
    sub.add_parser("network", parents=[common], help="network-level dynamicity only")
    sub.add_parser("matrix", parents=[common],
                   help="actor-by-window dynamicity matrix")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    closeness = HARMONIC if args.closeness == "harmonic" else WF_CORRECTED
    norm = PER_NETWORK if args.norm_base == "per-network" else AGGREGATED_N
    metric_names = [tok for tok in args.metrics.split(",") if tok.strip()]
    if not metric_names:
        raise ConfigurationError("--metrics must name at least one metric")
    metrics = tuple(
        metric_from_name(tok, closeness_variant=closeness, normalization_base=norm)
        for tok in metric_names
    )
    if not args.directed:
        for spec in metrics:
            if spec.kind in ("in_degree", "out_degree"):
                raise ConfigurationError(f"{spec.kind} requires --directed")
    columns = dict(args.columns)
    if args.no_header and all(isinstance(v, str) for v in columns.values()):
        if columns == {"source": "source", "target": "target", "timestamp": "timestamp"}:
            columns = {"source": 0, "target": 1, "timestamp": 2}
    ingest = IngestConfig(
        format=args.format,
        delimiter=args.delimiter,
        columns=columns,
        timestamp_format=args.timestamp_format,
        casefold_ids=args.casefold_ids,
        has_header=not args.no_header,
    )
    return RunConfig(
        input_path=args.input,
        ingest=ingest,
        window=_window_plan(args.window, args.tz_offset, args.window_origin),
        directed=args.directed,
        metrics=metrics,
        ddn_mode=EQ6_LITERAL if args.ddn_mode == "eq6" else MEAN_DDA,
        top_k=args.top,
        output_format=args.output_format,
        out_path=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        report = run_compute(config)
        emit_report(
            report,
            output_format=config.output_format,
            destination=config.out_path,
            sections=SECTION_BY_COMMAND[args.command],
        )
    except ConfigurationError as exc:
        print(f"netdyn: configuration error: {exc}", file=sys.stderr)
        return 2
    except (IngestError, WindowCoverageError, OSError) as exc:
        print(f"netdyn: ingest error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"netdyn: internal consistency error: {exc}", file=sys.stderr)
        return 4
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

"""Time-window slicing: short-interval networks, the aggregated network,
actor presence per window, and the presence-transition weights.

Windows are half-open ``[start, end)`` so a boundary timestamp belongs to
exactly one window, and they form a contiguous, gap-free cover of the event
time span. Empty windows are kept so window indices stay aligned with
calendar time (window count m is part of the observation design).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Sequence

from .errors import ConfigurationError, WindowCoverageError
from .graph import Graph, build_graph, union

CALENDAR_UNITS = ("day", "week", "month")


@dataclass(frozen=True)
class TemporalEvent:
    source: str
    target: str
    timestamp: int  # epoch seconds, UTC
    weight: float | None = None


@dataclass(frozen=True)
class WindowPlan:
    """One of three schemes: fixed-duration windows from an origin, civil
    calendar windows in a fixed UTC offset, or explicit boundaries."""

    scheme: str  # "fixed" | "calendar" | "explicit"
    length: int | None = None
    origin: int = 0
    unit: str | None = None
    tz_offset: int = 0  # seconds east of UTC
    boundaries: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.scheme == "fixed":
            if not self.length or self.length <= 0:
                raise ConfigurationError("fixed window length must be positive")
        elif self.scheme == "calendar":
            if self.unit not in CALENDAR_UNITS:
                raise ConfigurationError(f"unknown calendar unit: {self.unit!r}")
        elif self.scheme == "explicit":
            b = self.boundaries or ()
            if len(b) < 2:
                raise ConfigurationError("explicit plan needs >= 2 boundaries")
            if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise ConfigurationError("boundaries must be strictly increasing")
        else:
            raise ConfigurationError(f"unknown window scheme: {self.scheme!r}")

    def describe(self) -> str:
        if self.scheme == "fixed":
            return f"fixed:{self.length}s@{self.origin}"
        if self.scheme == "calendar":
            return f"calendar:{self.unit}(tz_offset={self.tz_offset}s)"
        return f"explicit:{len(self.boundaries) - 1} windows"


@dataclass(frozen=True)
class ShortIntervalNetwork:
    index: int  # 1-based window index
    start: int
    end: int
    graph: Graph
    event_count: int


@dataclass(frozen=True)
class SlicedNetwork:
    sins: tuple[ShortIntervalNetwork, ...]
    aggregated: Graph

    @property
    def m(self) -> int:
        return len(self.sins)


def _floor_to_unit(dt: datetime, unit: str) -> datetime:
    dt = dt.replace(hour=0, minute=0, second=0, microsecond=0)
    if unit == "week":
        dt = dt - timedelta(days=dt.weekday())
    elif unit == "month":
        dt = dt.replace(day=1)
    return dt


def _advance(dt: datetime, unit: str) -> datetime:
    if unit == "day":
        return dt + timedelta(days=1)
    if unit == "week":
        return dt + timedelta(days=7)
    if dt.month == 12:
        return dt.replace(year=dt.year + 1, month=1)
    return dt.replace(month=dt.month + 1)


def window_bounds(plan: WindowPlan, min_ts: int, max_ts: int) -> list[tuple[int, int]]:
    """Ordered, contiguous half-open windows covering [min_ts, max_ts]."""
    if plan.scheme == "explicit":
        b = plan.boundaries
        return [(b[i], b[i + 1]) for i in range(len(b) - 1)]
    if plan.scheme == "fixed":
        length = plan.length
        start = plan.origin + ((min_ts - plan.origin) // length) * length
        windows = []
        while start <= max_ts:
            windows.append((start, start + length))
            start += length
        return windows
    tz = timezone(timedelta(seconds=plan.tz_offset))
    cur = _floor_to_unit(datetime.fromtimestamp(min_ts, tz), plan.unit)
    bounds = [int(cur.timestamp())]
    while bounds[-1] <= max_ts:
        cur = _advance(cur, plan.unit)
        bounds.append(int(cur.timestamp()))
    return list(zip(bounds[:-1], bounds[1:]))


def slice_events(events: Sequence[TemporalEvent], plan: WindowPlan,
                 mode: str = "undirected") -> SlicedNetwork:
    """Partition events into short-interval networks plus their union."""
    if not events:
        raise ConfigurationError("cannot slice an empty event list")
    min_ts = min(e.timestamp for e in events)
    max_ts = max(e.timestamp for e in events)
    windows = window_bounds(plan, min_ts, max_ts)
    outside = [e.timestamp for e in events
               if e.timestamp < windows[0][0] or e.timestamp >= windows[-1][1]]
    if outside:
        raise WindowCoverageError(outside)
    first_start = windows[0][0]
    per_window: list[list[tuple[str, str]]] = [[] for _ in windows]
    if plan.scheme == "fixed":
        for e in events:
            per_window[(e.timestamp - first_start) // plan.length].append(
                (e.source, e.target))
    else:
        starts = [w[0] for w in windows]
        for e in events:
            j = bisect.bisect_right(starts, e.timestamp) - 1
            per_window[j].append((e.source, e.target))
    sins = tuple(
        ShortIntervalNetwork(
            index=j + 1, start=start, end=end,
            graph=build_graph(edges, mode), event_count=len(edges),
        )
        for j, ((start, end), edges) in enumerate(zip(windows, per_window))
    )
    aggregated = union(s.graph for s in sins)
    return SlicedNetwork(sins=sins, aggregated=aggregated)


@dataclass(frozen=True)
class PresenceMatrix:
    """Actor-by-window presence flags over the aggregated actor universe.
    Presence means incidence to at least one edge in that window."""

    actors: tuple[str, ...]  # sorted aggregated node set
    window_members: tuple[frozenset[str], ...]  # index j-1 -> present actors

    @property
    def m(self) -> int:
        return len(self.window_members)

    def is_present(self, actor: str, j: int) -> bool:
        return actor in self.window_members[j - 1]

    def window_actors(self, j: int) -> frozenset[str]:
        return self.window_members[j - 1]


def presence_matrix(sliced: SlicedNetwork) -> PresenceMatrix:
    members = tuple(
        frozenset(v for v in s.graph.nodes if s.graph.degree(v) > 0)
        for s in sliced.sins
    )
    return PresenceMatrix(
        actors=tuple(sorted(sliced.aggregated.nodes)),
        window_members=members,
    )


@dataclass(frozen=True)
class AlphaWeights:
    """Presence-transition weights per (actor, window): 1.0 when present in
    this and the previous window, 0.5 when present after an absence, 0.0 when
    absent now. The first window has no predecessor: present -> 1.0."""

    actors: tuple[str, ...]
    m: int
    values: dict[tuple[str, int], float]

    def get(self, actor: str, j: int) -> float:
        return self.values[(actor, j)]


def alpha_weights(presence: PresenceMatrix) -> AlphaWeights:
    values: dict[tuple[str, int], float] = {}
    for actor in presence.actors:
        for j in range(1, presence.m + 1):
            now = presence.is_present(actor, j)
            if not now:
                values[(actor, j)] = 0.0
            elif j == 1 or presence.is_present(actor, j - 1):
                values[(actor, j)] = 1.0
            else:
                values[(actor, j)] = 0.5
    return AlphaWeights(actors=presence.actors, m=presence.m, values=values)

"""Normalized actor-level centralities, each scaled into [0, 1].

Five metrics ship: degree, in_degree, out_degree, closeness (harmonic or
Wasserman-Faust-corrected classic) and betweenness (Brandes). Every metric
takes an explicit normalisation base ``base_n`` so window networks can be
scored either against their own size or against the aggregated actor count.

Degenerate bases (base_n of 1 or 2 where the formula would divide by zero)
return 0 rather than failing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConfigurationError
from .graph import Graph, node_count

DEGREE = "degree"
IN_DEGREE = "in_degree"
OUT_DEGREE = "out_degree"
CLOSENESS = "closeness"
BETWEENNESS = "betweenness"

METRIC_KINDS = (DEGREE, IN_DEGREE, OUT_DEGREE, CLOSENESS, BETWEENNESS)

HARMONIC = "harmonic"
WF_CORRECTED = "wf_corrected"

PER_NETWORK = "per_network"
AGGREGATED_N = "aggregated_n"


@dataclass(frozen=True)
class MetricSpec:
    kind: str
    closeness_variant: str = HARMONIC
    normalization_base: str = PER_NETWORK

    def __post_init__(self):
        if self.kind not in METRIC_KINDS:
            raise ConfigurationError(f"unknown metric kind: {self.kind!r}")
        if self.closeness_variant not in (HARMONIC, WF_CORRECTED):
            raise ConfigurationError(
                f"unknown closeness variant: {self.closeness_variant!r}"
            )
        if self.normalization_base not in (PER_NETWORK, AGGREGATED_N):
            raise ConfigurationError(
                f"unknown normalization base: {self.normalization_base!r}"
            )

    @property
    def label(self) -> str:
        return self.kind


@dataclass(frozen=True)
class CentralityScores:
    metric: MetricSpec
    scores: dict[str, float]
    network_size: int

    def get(self, actor: str) -> float:
        """Score for ``actor``; 0.0 when the actor is not in the measured graph."""
        return self.scores.get(actor, 0.0)


def metric_from_name(name: str, closeness_variant: str = HARMONIC,
                     normalization_base: str = PER_NETWORK) -> MetricSpec:
    """Resolve a CLI/config metric name into a MetricSpec."""
    key = name.strip().lower().replace("-", "_")
    if key not in METRIC_KINDS:
        raise ConfigurationError(f"unknown metric name: {name!r}")
    return MetricSpec(kind=key, closeness_variant=closeness_variant,
                      normalization_base=normalization_base)


def _csr(graph: Graph) -> tuple[list[str], np.ndarray, np.ndarray]:
    """CSR of out-adjacency over lexicographically ordered nodes."""
    order = sorted(graph.nodes)
    index = {a: i for i, a in enumerate(order)}
    indptr = np.zeros(len(order) + 1, dtype=np.int64)
    cols: list[int] = []
    for i, a in enumerate(order):
        nbrs = sorted(graph.out_adj[a])
        cols.extend(index[b] for b in nbrs)
        indptr[i + 1] = len(cols)
    indices = np.asarray(cols, dtype=np.int64)
    return order, indptr, indices


def degree_centrality(graph: Graph, direction: str = "all",
                      base_n: int | None = None,
                      spec: MetricSpec | None = None) -> CentralityScores:
    if direction not in ("all", "in", "out"):
        raise ConfigurationError(f"unknown degree direction: {direction!r}")
    if direction != "all" and not graph.directed:
        raise ConfigurationError(
            f"{direction}-degree requires a directed graph"
        )
    n = node_count(graph) if base_n is None else base_n
    if n < 1:
        raise ConfigurationError("base_n must be >= 1")
    if direction == "in":
        deg = graph.in_degree
    elif direction == "out":
        deg = graph.out_degree
    else:
        deg = graph.degree
    denom = n - 1
    scores = {
        v: (deg(v) / denom if denom > 0 else 0.0) for v in sorted(graph.nodes)
    }
    spec = spec or MetricSpec({"all": DEGREE, "in": IN_DEGREE, "out": OUT_DEGREE}[direction])
    return CentralityScores(metric=spec, scores=scores, network_size=n)


def closeness_centrality(graph: Graph, variant: str = HARMONIC,
                         base_n: int | None = None,
                         spec: MetricSpec | None = None) -> CentralityScores:
    if variant not in (HARMONIC, WF_CORRECTED):
        raise ConfigurationError(f"unknown closeness variant: {variant!r}")
    n = node_count(graph) if base_n is None else base_n
    if n < 1:
        raise ConfigurationError("base_n must be >= 1")
    order, indptr, indices = _csr(graph)
    reach, dist_sum, inv_sum = _kernels.bfs_distance_sums(
        indptr, indices, len(order)
    )
    denom = n - 1
    scores: dict[str, float] = {}
    for i, v in enumerate(order):
        if denom == 0 or reach[i] == 0:
            scores[v] = 0.0
        elif variant == HARMONIC:
            scores[v] = float(inv_sum[i]) / denom
        else:
            # Classic closeness over the reachable set of size k, scaled by
            # the Wasserman-Faust factor (k-1)/(base_n-1).
            k_minus_1 = int(reach[i])
            scores[v] = (k_minus_1 / float(dist_sum[i])) * (k_minus_1 / denom)
    spec = spec or MetricSpec(CLOSENESS, closeness_variant=variant)
    return CentralityScores(metric=spec, scores=scores, network_size=n)


def betweenness_centrality(graph: Graph, base_n: int | None = None,
                           spec: MetricSpec | None = None) -> CentralityScores:
    n = node_count(graph) if base_n is None else base_n
    if n < 1:
        raise ConfigurationError("base_n must be >= 1")
    order, indptr, indices = _csr(graph)
    if n < 3 or not order:
        scores = {v: 0.0 for v in order}
    else:
        raw = _kernels.brandes_betweenness(indptr, indices, len(order))
        if graph.directed:
            norm = (n - 1) * (n - 2)
        else:
            raw = raw / 2.0
            norm = (n - 1) * (n - 2) / 2.0
        scores = {v: float(raw[i]) / norm for i, v in enumerate(order)}
    spec = spec or MetricSpec(BETWEENNESS)
    return CentralityScores(metric=spec, scores=scores, network_size=n)


def compute_metric(graph: Graph, spec: MetricSpec,
                   aggregated_n: int | None = None) -> CentralityScores:
    """Dispatch a MetricSpec onto a graph with the right normalisation base."""
    if spec.normalization_base == AGGREGATED_N:
        if aggregated_n is None:
            raise ConfigurationError(
                "normalization_base=aggregated_n requires aggregated_n"
            )
        base_n = aggregated_n
    else:
        base_n = max(node_count(graph), 1)
    if spec.kind in (IN_DEGREE, OUT_DEGREE) and not graph.directed:
        raise ConfigurationError(f"{spec.kind} requires a directed graph")
    if spec.kind == DEGREE:
        return degree_centrality(graph, "all", base_n, spec=spec)
    if spec.kind == IN_DEGREE:
        return degree_centrality(graph, "in", base_n, spec=spec)
    if spec.kind == OUT_DEGREE:
        return degree_centrality(graph, "out", base_n, spec=spec)
    if spec.kind == CLOSENESS:
        return closeness_centrality(graph, spec.closeness_variant, base_n, spec=spec)
    return betweenness_centrality(graph, base_n, spec=spec)

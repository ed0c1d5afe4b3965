"""Immutable simple-graph representation with string actor identities.

Graphs are plain adjacency-set structures, either undirected or directed.
Self-loops are dropped at construction (the centrality normalisations assume
no self-ties) and duplicate edges collapse, so every graph is simple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ConfigurationError

UNDIRECTED = "undirected"
DIRECTED = "directed"


def normalize_actor(label: str) -> str:
    """Trim surrounding whitespace; actor labels must be non-empty after that."""
    label = label.strip()
    if not label:
        raise ValueError("actor label is empty after trimming whitespace")
    return label


@dataclass(frozen=True)
class Graph:
    """A simple graph. For undirected graphs ``out_adj`` is the symmetric
    adjacency and ``in_adj`` is the same mapping."""

    mode: str
    nodes: frozenset[str]
    out_adj: dict[str, frozenset[str]]
    in_adj: dict[str, frozenset[str]]
    dropped_self_loops: int = field(default=0, compare=False)

    @property
    def directed(self) -> bool:
        return self.mode == DIRECTED

    def neighbors(self, v: str) -> frozenset[str]:
        """Out-neighbors in directed mode, all neighbors otherwise."""
        return self.out_adj[v]

    def degree(self, v: str) -> int:
        if self.directed:
            return len(self.out_adj[v] | self.in_adj[v])
        return len(self.out_adj[v])

    def in_degree(self, v: str) -> int:
        return len(self.in_adj[v])

    def out_degree(self, v: str) -> int:
        return len(self.out_adj[v])

    def edges(self) -> set[tuple[str, str]]:
        """Edge set; undirected edges are canonicalised as sorted pairs."""
        out: set[tuple[str, str]] = set()
        for a, nbrs in self.out_adj.items():
            for b in nbrs:
                out.add((a, b) if self.directed else tuple(sorted((a, b))))
        return out

    def edge_count(self) -> int:
        return len(self.edges())

    def __contains__(self, v: str) -> bool:
        return v in self.nodes

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.nodes))


def build_graph(
    edges: Iterable[tuple[str, str]],
    mode: str = UNDIRECTED,
    extra_nodes: Iterable[str] = (),
) -> Graph:
    """Build a simple graph from (source, target) pairs.

    Self-loops are dropped (counted in ``dropped_self_loops``); duplicates
    collapse; in undirected mode (a, b) and (b, a) are the same edge.
    ``extra_nodes`` become isolated nodes.
    """
    if mode not in (UNDIRECTED, DIRECTED):
        raise ConfigurationError(f"unknown graph mode: {mode!r}")
    out: dict[str, set[str]] = {}
    inn: dict[str, set[str]] = {}
    nodes: set[str] = set(extra_nodes)
    self_loops = 0
    for a, b in edges:
        if a == b:
            self_loops += 1
            continue
        nodes.add(a)
        nodes.add(b)
        out.setdefault(a, set()).add(b)
        inn.setdefault(b, set()).add(a)
        if mode == UNDIRECTED:
            out.setdefault(b, set()).add(a)
            inn.setdefault(a, set()).add(b)
    frozen_out = {v: frozenset(out.get(v, ())) for v in nodes}
    if mode == UNDIRECTED:
        frozen_in = frozen_out
    else:
        frozen_in = {v: frozenset(inn.get(v, ())) for v in nodes}
    return Graph(
        mode=mode,
        nodes=frozenset(nodes),
        out_adj=frozen_out,
        in_adj=frozen_in,
        dropped_self_loops=self_loops,
    )


def union(graphs: Iterable[Graph]) -> Graph:
    """Union of node and edge sets. All graphs must share one mode; the
    union of no graphs is the empty undirected graph."""
    graphs = list(graphs)
    if not graphs:
        return build_graph([], UNDIRECTED)
    modes = {g.mode for g in graphs}
    if len(modes) > 1:
        raise ConfigurationError("cannot union graphs with mixed directedness modes")
    mode = graphs[0].mode
    edges: set[tuple[str, str]] = set()
    nodes: set[str] = set()
    for g in graphs:
        nodes |= g.nodes
        for a, nbrs in g.out_adj.items():
            for b in nbrs:
                edges.add((a, b))
    return build_graph(edges, mode, extra_nodes=nodes)


def node_count(graph: Graph) -> int:
    return len(graph.nodes)

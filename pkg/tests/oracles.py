"""Independent brute-force oracles used by the test suite.

Nothing here touches the package's CSR kernels: distances come from
per-source dict BFS or Floyd-Warshall, and betweenness from exhaustive
shortest-path enumeration over the predecessor-free path set.
"""

from __future__ import annotations

import itertools
import random

INF = float("inf")


def adjacency(nodes, edges, directed=False):
    adj = {v: set() for v in nodes}
    for a, b in edges:
        if a == b:
            continue
        adj[a].add(b)
        if not directed:
            adj[b].add(a)
    return adj


def bfs_distances(adj, source):
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def degree_oracle(nodes, edges, base_n, directed=False, direction="all"):
    """Normalized degree by explicit edge-incidence counting."""
    incident = {v: set() for v in nodes}
    for a, b in edges:
        if a == b:
            continue
        if directed:
            if direction in ("all", "out"):
                incident[a].add(("out", b))
            if direction in ("all", "in"):
                incident[b].add(("in", a))
        else:
            incident[a].add(b)
            incident[b].add(a)
    if directed and direction == "all":
        # distinct neighbors regardless of edge direction
        incident = {
            v: {other for (_, other) in marks} for v, marks in incident.items()
        }
    denom = base_n - 1
    return {v: (len(incident[v]) / denom if denom else 0.0) for v in nodes}


def harmonic_closeness_oracle(nodes, edges, base_n, directed=False):
    adj = adjacency(nodes, edges, directed)
    denom = base_n - 1
    out = {}
    for v in nodes:
        dist = bfs_distances(adj, v)
        total = sum(1.0 / d for u, d in dist.items() if u != v)
        out[v] = total / denom if denom else 0.0
    return out


def wf_closeness_oracle(nodes, edges, base_n, directed=False):
    adj = adjacency(nodes, edges, directed)
    denom = base_n - 1
    out = {}
    for v in nodes:
        dist = bfs_distances(adj, v)
        reach = len(dist) - 1
        if reach == 0 or denom == 0:
            out[v] = 0.0
        else:
            out[v] = (reach / sum(d for u, d in dist.items() if u != v)) * (
                reach / denom
            )
    return out


def _all_shortest_paths(adj, dist_from_s, s, t):
    """Enumerate every shortest s-t path by walking the BFS level structure."""
    if t not in dist_from_s:
        return []
    target_len = dist_from_s[t]
    paths = []

    def walk(v, path):
        if v == t:
            paths.append(tuple(path))
            return
        for w in adj[v]:
            if dist_from_s.get(w) == len(path):
                walk(w, path + [w])

    walk(s, [s])
    assert all(len(p) == target_len + 1 for p in paths)
    return paths


def betweenness_oracle(nodes, edges, base_n, directed=False):
    """Normalized betweenness by exhaustive shortest-path enumeration."""
    adj = adjacency(nodes, edges, directed)
    raw = {v: 0.0 for v in nodes}
    pairs = (
        itertools.permutations(nodes, 2)
        if directed
        else itertools.combinations(nodes, 2)
    )
    for s, t in pairs:
        paths = _all_shortest_paths(adj, bfs_distances(adj, s), s, t)
        if not paths:
            continue
        for v in nodes:
            if v in (s, t):
                continue
            raw[v] += sum(1 for p in paths if v in p) / len(paths)
    if base_n < 3:
        return {v: 0.0 for v in nodes}
    norm = (base_n - 1) * (base_n - 2) * (1.0 if directed else 0.5)
    return {v: raw[v] / norm for v in nodes}


def random_graph(rng: random.Random, max_nodes: int, directed=False):
    """A random simple graph as (nodes, edges); may be disconnected."""
    n = rng.randint(1, max_nodes)
    nodes = [f"v{i:02d}" for i in range(n)]
    edges = set()
    density = rng.uniform(0.05, 0.6)
    for a, b in itertools.permutations(nodes, 2) if directed else itertools.combinations(nodes, 2):
        if rng.random() < density:
            edges.add((a, b))
    return nodes, sorted(edges)


def random_events(rng: random.Random, max_actors: int, max_windows: int,
                  window_len: int = 100):
    """Random temporal events spanning up to max_windows fixed windows."""
    from netdyn.windows import TemporalEvent

    n = rng.randint(2, max_actors)
    m = rng.randint(1, max_windows)
    actors = [f"a{i:02d}" for i in range(n)]
    events = []
    count = rng.randint(1, n * m * 2)
    for _ in range(count):
        a, b = rng.sample(actors, 2)
        ts = rng.randrange(0, m * window_len)
        events.append(TemporalEvent(a, b, ts))
    return events, m, window_len

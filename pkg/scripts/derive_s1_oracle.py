#!/usr/bin/env python3
"""Derive the expected values for the S1 fixture by brute force.

Deliberately independent of the netdyn package: centralities come from
Floyd-Warshall distances and exhaustive shortest-path enumeration, and the
dynamicity formulas are written out directly. The result is committed as
tests/fixtures/s1_oracle.json and the test suite treats it as frozen.

Run from the repository root:

    python3 scripts/derive_s1_oracle.py
"""

import itertools
import json
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# S1: 5 actors, 3 windows of length 100 from origin 0 (undirected).
WINDOW_EDGES = [
    {("A", "B"), ("A", "C"), ("B", "C")},
    {("A", "B"), ("C", "D")},
    {("A", "B"), ("A", "E"), ("B", "D")},
]


def norm_edges(edges):
    return {tuple(sorted(e)) for e in edges}


def nodes_of(edges):
    return sorted({v for e in edges for v in e})


def distances(edges, universe):
    """All-pairs shortest paths by Floyd-Warshall."""
    inf = float("inf")
    d = {(a, b): (0 if a == b else inf) for a in universe for b in universe}
    for a, b in edges:
        d[(a, b)] = d[(b, a)] = 1
    for k, i, j in itertools.product(universe, repeat=3):
        if d[(i, k)] + d[(k, j)] < d[(i, j)]:
            d[(i, j)] = d[(i, k)] + d[(k, j)]
    return d


def degree_scores(edges, base_n):
    deg = {v: 0 for v in nodes_of(edges)}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return {v: deg[v] / (base_n - 1) for v in deg}


def harmonic_scores(edges, base_n):
    universe = nodes_of(edges)
    d = distances(edges, universe)
    out = {}
    for v in universe:
        total = sum(
            1.0 / d[(v, u)] for u in universe if u != v and d[(v, u)] != float("inf")
        )
        out[v] = total / (base_n - 1)
    return out


def wf_scores(edges, base_n):
    universe = nodes_of(edges)
    d = distances(edges, universe)
    out = {}
    for v in universe:
        reach = [u for u in universe if u != v and d[(v, u)] != float("inf")]
        if not reach:
            out[v] = 0.0
            continue
        k1 = len(reach)
        out[v] = (k1 / sum(d[(v, u)] for u in reach)) * (k1 / (base_n - 1))
    return out


def all_shortest_paths(edges, s, t, universe):
    """Enumerate every shortest s-t path by breadth-limited DFS."""
    adj = {v: set() for v in universe}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    d = distances(edges, universe)
    if d[(s, t)] == float("inf"):
        return []
    paths = []

    def walk(v, path):
        if v == t:
            paths.append(tuple(path))
            return
        for w in sorted(adj[v]):
            if d[(s, w)] == len(path) and d[(w, t)] == d[(s, t)] - len(path):
                walk(w, path + [w])

    walk(s, [s])
    return paths


def betweenness_scores(edges, base_n):
    universe = nodes_of(edges)
    raw = {v: 0.0 for v in universe}
    for s, t in itertools.combinations(universe, 2):
        paths = all_shortest_paths(edges, s, t, universe)
        if not paths:
            continue
        for v in universe:
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p)
            raw[v] += through / len(paths)
    norm = (base_n - 1) * (base_n - 2) / 2
    return {v: (raw[v] / norm if norm else 0.0) for v in universe}


METRICS = {
    "degree": degree_scores,
    "closeness": harmonic_scores,
    "betweenness": betweenness_scores,
}


def main():
    windows = [norm_edges(e) for e in WINDOW_EDGES]
    agg = set().union(*windows)
    actors = nodes_of(agg)
    n = len(actors)
    m = len(windows)

    present = {
        (a, j): a in nodes_of(windows[j - 1])
        for a in actors for j in range(1, m + 1)
    }
    alpha = {}
    for a in actors:
        for j in range(1, m + 1):
            if not present[(a, j)]:
                alpha[(a, j)] = 0.0
            elif j == 1 or present[(a, j - 1)]:
                alpha[(a, j)] = 1.0
            else:
                alpha[(a, j)] = 0.5

    oracle = {
        "n": n,
        "m": m,
        "actors": actors,
        "alpha": {a: [alpha[(a, j)] for j in range(1, m + 1)] for a in actors},
        "metrics": {},
    }
    for name, score_fn in METRICS.items():
        # per_network normalization: each network scored against its own size
        ov_an = score_fn(agg, n)
        ov_sin = []
        for edges in windows:
            win_nodes = nodes_of(edges)
            scores = score_fn(edges, len(win_nodes)) if win_nodes else {}
            ov_sin.append({a: scores.get(a, 0.0) for a in actors})

        matrix = {
            a: [
                alpha[(a, j)] * abs(ov_an.get(a, 0.0) - ov_sin[j - 1][a])
                for j in range(1, m + 1)
            ]
            for a in actors
        }
        dda = {a: sum(matrix[a]) / m for a in actors}
        dda_star = max(dda.values())
        contributions = {a: (1 - (dda_star - dda[a])) / n for a in actors}
        ddn_sin = []
        for j in range(1, m + 1):
            members = [a for a in actors if present[(a, j)]]
            if not members:
                ddn_sin.append(None)
                continue
            total = sum(
                alpha[(a, j)] * abs(ov_an.get(a, 0.0) - ov_sin[j - 1][a])
                for a in members
            )
            ddn_sin.append(total / len(members))
        oracle["metrics"][name] = {
            "ov_an": ov_an,
            "matrix": matrix,
            "dda": dda,
            "dda_star": dda_star,
            "contributions": contributions,
            "ddn_sin": ddn_sin,
            "ddn_eq6_literal": sum(contributions.values()),
            "ddn_mean_dda": sum(dda.values()) / n,
        }

    out = FIXTURES / "s1_oracle.json"
    out.write_text(json.dumps(oracle, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

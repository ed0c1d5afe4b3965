"""Array kernels for shortest-path centralities on CSR adjacency.

Compiled with numba when it is importable; the same code runs (slower) as
plain Python otherwise. All loops are deterministic: sources ascending,
neighbors in CSR order.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an expected dependency

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def brandes_betweenness(indptr, indices, n):
    """Raw pair-dependency accumulation over all sources.

    With a symmetric CSR (undirected graph) each unordered pair is counted
    twice; callers halve the result in that case.
    """
    bc = np.zeros(n)
    dist = np.empty(n, np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    queue = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head = 0
        tail = 1
        cnt = 0
        while head < tail:
            v = queue[head]
            head += 1
            order[cnt] = v
            cnt += 1
            dv = dist[v]
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        # Reverse BFS order: successors of v are finalised before v.
        for oi in range(cnt - 1, -1, -1):
            v = order[oi]
            dv = dist[v]
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if dist[w] == dv + 1:
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if v != s:
                bc[v] += delta[v]
    return bc


@njit(cache=True)
def bfs_distance_sums(indptr, indices, n):
    """Per source: reachable-node count (excluding self), sum of shortest-path
    distances to reachable nodes, and sum of inverse distances."""
    reach = np.zeros(n, np.int64)
    dist_sum = np.zeros(n, np.int64)
    inv_sum = np.zeros(n)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v]
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue[tail] = w
                    tail += 1
                    reach[s] += 1
                    dist_sum[s] += dv + 1
                    inv_sum[s] += 1.0 / (dv + 1)
    return reach, dist_sum, inv_sum

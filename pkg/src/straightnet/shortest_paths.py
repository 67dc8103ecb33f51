"""Exact geodesic distances: single-source Dijkstra and an all-pairs driver."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from heapq import heappop, heappush

import numpy as np

from .model import NetworkGraph

THREADS_ENV_VAR = "STRAIGHTNESS_THREADS"


def worker_count(requested: int | None = None) -> int:
    """Effective parallelism, capped by the STRAIGHTNESS_THREADS env var.

    0 (or unset) means auto-detect.  Results never depend on the worker
    count; it only bounds concurrency.
    """
    if requested is None:
        raw = os.environ.get(THREADS_ENV_VAR, "0")
        try:
            requested = int(raw)
        except ValueError as exc:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if requested < 0:
        raise ValueError("thread count must be >= 0")
    if requested == 0:
        return os.cpu_count() or 1
    return requested


def dijkstra(graph: NetworkGraph, source: int) -> np.ndarray:
    """Shortest-path distances from ``source`` under edge-length weights.

    Returns one float64 entry per node, ``inf`` for unreachable nodes.
    The heap breaks ties by (distance, node id) so traversal order is
    reproducible, although the distances themselves are order-independent.
    """
    n = graph.node_count
    if not 0 <= source < n:
        raise ValueError(f"source id {source} outside 0..{n - 1}")
    adjacency = graph.adjacency
    dist = [math.inf] * n
    dist[source] = 0.0
    settled = bytearray(n)
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heappop(heap)
        if settled[u]:
            continue
        settled[u] = 1
        for v, w in adjacency[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    return np.asarray(dist)


def all_pairs(graph: NetworkGraph, threads: int | None = None) -> np.ndarray:
    """Full ``(N, N)`` geodesic distance matrix, row i = distances from i.

    Rows are independent single-source runs and may be computed
    concurrently; the result is assembled in source-id order, so the matrix
    is identical for any worker count.
    """
    n = graph.node_count
    workers = worker_count(threads)
    if workers <= 1 or n <= 2:
        rows = [dijkstra(graph, s) for s in range(n)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda s: dijkstra(graph, s), range(n)))
    return np.vstack(rows) if rows else np.zeros((0, 0))

"""Core graph model: planar embedded graphs with straight-segment edges."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np


class Point2D(NamedTuple):
    """Node position in the plane (unitless coordinates)."""

    x: float
    y: float


def euclidean_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Crow-flies distance between two points."""
    return math.hypot(a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class RouteMetrics:
    """Spatial distance, on-network distance and their ratio for one pair.

    ``straightness`` is ``d_spatial / d_geodesic`` and lies in ``(0, 1]``
    whenever the pair is measurable.  Pairs whose geodesic distance is
    infinite (disconnected graph) or whose spatial distance is zero are
    flagged ``skipped`` and carry ``nan`` straightness.
    """

    source: int
    target: int
    d_spatial: float
    d_geodesic: float
    straightness: float
    skipped: bool = False


class NetworkGraph:
    """Immutable undirected geometric graph.

    Nodes are dense integer ids ``0..N-1`` at pairwise-distinct positions.
    Edges are straight segments; their lengths are always derived from the
    endpoint positions, never stored independently, so geometry and edge
    weight cannot disagree.  Instances are safe to share across threads.

    Parameters
    ----------
    nodes : sequence of (x, y)
        Node positions, one per id, all coordinates finite.
    edges : sequence of (u, v)
        Unordered id pairs.  Self-loops and duplicate edges are rejected.

    Raises
    ------
    ValueError
        On duplicate positions, invalid ids, self-loops or repeated edges.
    """

    __slots__ = ("_positions", "_edges", "_lengths", "_adjacency")

    def __init__(self, nodes, edges) -> None:
        # copy so freezing the array never affects a caller-owned buffer
        positions = np.atleast_2d(np.array(nodes, dtype=float))
        if positions.size == 0:
            positions = positions.reshape(0, 2)
        if positions.ndim != 2 or positions.shape[1] != 2:
            raise ValueError("nodes must be a sequence of (x, y) pairs")
        if not np.all(np.isfinite(positions)):
            raise ValueError("node coordinates must be finite")

        seen: dict[tuple[float, float], int] = {}
        for i in range(len(positions)):
            key = (float(positions[i, 0]), float(positions[i, 1]))
            if key in seen:
                raise ValueError(
                    f"nodes {seen[key]} and {i} share the position {key}"
                )
            seen[key] = i

        n = len(positions)
        pairs: list[tuple[int, int]] = []
        known: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references an unknown node id")
            if u == v:
                raise ValueError(f"self-loop on node {u} is not allowed")
            pair = (u, v) if u < v else (v, u)
            if pair in known:
                raise ValueError(f"duplicate edge {pair}")
            known.add(pair)
            pairs.append(pair)

        edge_arr = np.asarray(pairs, dtype=np.int64).reshape(len(pairs), 2)
        if len(pairs):
            du = positions[edge_arr[:, 0]] - positions[edge_arr[:, 1]]
            lengths = np.hypot(du[:, 0], du[:, 1])
        else:
            lengths = np.zeros(0)

        adjacency: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for (u, v), w in zip(pairs, lengths):
            w = float(w)
            adjacency[u].append((v, w))
            adjacency[v].append((u, w))

        for arr in (positions, edge_arr, lengths):
            arr.setflags(write=False)
        object.__setattr__(self, "_positions", positions)
        object.__setattr__(self, "_edges", edge_arr)
        object.__setattr__(self, "_lengths", lengths)
        object.__setattr__(self, "_adjacency", tuple(tuple(a) for a in adjacency))

    def __setattr__(self, name, value):
        raise AttributeError("NetworkGraph is immutable")

    @property
    def node_count(self) -> int:
        return len(self._positions)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def positions(self) -> np.ndarray:
        """Read-only ``(N, 2)`` array of node positions."""
        return self._positions

    @property
    def edges(self) -> np.ndarray:
        """Read-only ``(E, 2)`` array of edges, each row sorted ``u < v``."""
        return self._edges

    @property
    def edge_lengths(self) -> np.ndarray:
        """Euclidean length of each edge, derived from positions."""
        return self._lengths

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-node tuple of ``(neighbor, edge_length)`` pairs."""
        return self._adjacency

    def point(self, node: int) -> Point2D:
        x, y = self._positions[node]
        return Point2D(float(x), float(y))

    def neighbors(self, node: int) -> tuple[tuple[int, float], ...]:
        return self._adjacency[node]

    def __repr__(self) -> str:
        return f"NetworkGraph(nodes={self.node_count}, edges={self.edge_count})"


def build_graph(nodes, edges) -> NetworkGraph:
    """Validate and assemble a :class:`NetworkGraph`.

    Thin constructor wrapper kept as the conventional entry point; see
    :class:`NetworkGraph` for the accepted input and raised errors.
    """
    return NetworkGraph(nodes, edges)


def graph_to_json(graph: NetworkGraph) -> dict:
    """Portable dict form: node ids with coordinates plus edge id pairs.

    Edge lengths are intentionally not serialized; they are re-derived on
    load so files cannot carry inconsistent geometry.
    """
    return {
        "nodes": [
            {"id": i, "x": float(x), "y": float(y)}
            for i, (x, y) in enumerate(graph.positions)
        ],
        "edges": [{"u": int(u), "v": int(v)} for u, v in graph.edges],
    }


def graph_from_json(data: dict) -> NetworkGraph:
    """Rebuild a graph from the dict form produced by :func:`graph_to_json`."""
    try:
        raw_nodes = data["nodes"]
        raw_edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError("graph JSON must contain 'nodes' and 'edges'") from exc

    by_id: dict[int, tuple[float, float]] = {}
    for entry in raw_nodes:
        try:
            node_id = int(entry["id"])
            pos = (float(entry["x"]), float(entry["y"]))
        except (TypeError, KeyError, ValueError) as exc:
            raise ValueError(f"malformed node entry: {entry!r}") from exc
        if node_id in by_id:
            raise ValueError(f"node id {node_id} appears twice")
        by_id[node_id] = pos
    if set(by_id) != set(range(len(by_id))):
        raise ValueError("node ids must be dense integers 0..N-1")
    nodes = [by_id[i] for i in range(len(by_id))]

    edges = []
    for entry in raw_edges:
        try:
            edges.append((int(entry["u"]), int(entry["v"])))
        except (TypeError, KeyError, ValueError) as exc:
            raise ValueError(f"malformed edge entry: {entry!r}") from exc
    return build_graph(nodes, edges)


def save_graph(graph: NetworkGraph, path) -> None:
    Path(path).write_text(
        json.dumps(graph_to_json(graph), separators=(",", ":")) + "\n",
        encoding="utf-8",
    )


def load_graph(path) -> NetworkGraph:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    return graph_from_json(data)

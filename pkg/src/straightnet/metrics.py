"""Per-pair straightness, whole-graph aggregates and analytic cross-checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .analytic import (
    canonicalize,
    sector_angle,
    straightness_radial,
    straightness_rectilinear,
)
from .generators import RadialSpec, ring_node_id, side_node_id
from .model import NetworkGraph, RouteMetrics
from .shortest_paths import all_pairs, dijkstra


@dataclass(frozen=True)
class StraightnessSummary:
    """Aggregate over all unordered node pairs.

    ``std_dev`` is the population standard deviation: the pair set is the
    whole population of routes, not a sample from one.  ``skipped_pairs``
    counts pairs left out of the aggregate (unreachable, or co-located so
    the ratio is undefined); ``pair_count + skipped_pairs == N*(N-1)/2``.
    """

    pair_count: int
    mean: float
    std_dev: float
    skipped_pairs: int


def pair_straightness(
    graph: NetworkGraph, distances: np.ndarray, u: int, v: int
) -> RouteMetrics:
    """Route metrics for one pair, using a precomputed all-pairs matrix."""
    if u == v:
        raise ValueError("straightness of a node with itself is undefined")
    d_spatial = float(
        math.hypot(*(graph.positions[u] - graph.positions[v]))
    )
    d_geodesic = float(distances[u, v])
    if not math.isfinite(d_geodesic) or d_spatial == 0.0:
        return RouteMetrics(u, v, d_spatial, d_geodesic, math.nan, skipped=True)
    return RouteMetrics(u, v, d_spatial, d_geodesic, d_spatial / d_geodesic)


def iter_pair_metrics(
    graph: NetworkGraph, threads: int | None = None
) -> Iterator[RouteMetrics]:
    """All unordered pairs in canonical ``(min id, max id)`` order."""
    distances = all_pairs(graph, threads=threads)
    for u in range(graph.node_count - 1):
        for v in range(u + 1, graph.node_count):
            yield pair_straightness(graph, distances, u, v)


def _straightness_values(graph, threads):
    """Straightness per pair in canonical order, plus the skipped count."""
    distances = all_pairs(graph, threads=threads)
    positions = graph.positions
    chunks = []
    skipped = 0
    for u in range(graph.node_count - 1):
        d_g = distances[u, u + 1 :]
        d_s = np.hypot(
            positions[u + 1 :, 0] - positions[u, 0],
            positions[u + 1 :, 1] - positions[u, 1],
        )
        usable = np.isfinite(d_g) & (d_s > 0.0)
        skipped += int(len(d_g) - usable.sum())
        chunks.append(d_s[usable] / d_g[usable])
    values = np.concatenate(chunks) if chunks else np.zeros(0)
    return values, skipped


def summarize(
    graph: NetworkGraph, strict: bool = False, threads: int | None = None
) -> StraightnessSummary:
    """Mean and standard deviation of straightness over all node pairs.

    Two-pass aggregation over the canonically ordered pair list, so the
    result is bit-identical no matter how the underlying distance rows were
    scheduled.  With ``strict`` any skipped pair raises instead of being
    counted.
    """
    if graph.node_count < 2:
        raise ValueError("need at least 2 nodes to aggregate pair straightness")
    values, skipped = _straightness_values(graph, threads)
    if strict and skipped:
        raise ValueError(f"{skipped} pair(s) unreachable or co-located")
    if len(values) == 0:
        raise ValueError("no measurable pair in graph")
    mean = float(values.mean())
    std_dev = float(np.sqrt(np.mean((values - mean) ** 2)))
    return StraightnessSummary(
        pair_count=len(values), mean=mean, std_dev=std_dev, skipped_pairs=skipped
    )


def center_curve_check(graph: NetworkGraph) -> float:
    """Largest gap between measured and closed-form grid straightness.

    Expects a generated grid.  Measures straightness from corner node 0 to
    every other node with Dijkstra distances and compares against the
    closed form evaluated at each node's direction.  The corner quadrant is
    fully general thanks to rotation symmetry.
    """
    row = dijkstra(graph, 0)
    positions = graph.positions
    worst = 0.0
    for node in range(1, graph.node_count):
        x, y = positions[node]
        measured = math.hypot(x, y) / row[node]
        expected = straightness_rectilinear(math.atan2(y, x))
        worst = max(worst, abs(measured - expected))
    return worst


def center_radial_check(
    graph: NetworkGraph, spec: RadialSpec
) -> tuple[float, float]:
    """Measured vs. closed-form straightness from the center, per ring.

    Needs ``side_subdivision >= 2`` so destinations exist strictly between
    spokes, where the closed form is informative.  Returns
    ``(max_formula_deviation, max_ring_spread)``: the worst disagreement
    with the reduced closed form over all corner and subdivision nodes, and
    the worst spread of the measured value across rings for the same
    angular offset (which the scaling argument says must vanish).
    """
    if spec.side_subdivision < 2:
        raise ValueError("check needs side_subdivision >= 2")
    k = spec.radii_count
    theta = sector_angle(k)
    row = dijkstra(graph, 0)
    positions = graph.positions

    def measured_straightness(node: int) -> float:
        x, y = positions[node]
        return math.hypot(x, y) / row[node]

    worst_formula = 0.0
    for ring in range(1, spec.rings_count + 1):
        for radius in range(k):
            node = ring_node_id(spec, ring, radius)
            # Corner nodes sit on a spoke: the reduced direction is 0.
            worst_formula = max(worst_formula, abs(measured_straightness(node) - 1.0))

    worst_spread = 0.0
    for side in range(k):
        for step in range(1, spec.side_subdivision):
            across_rings = []
            for ring in range(1, spec.rings_count + 1):
                node = side_node_id(spec, ring, side, step)
                x, y = positions[node]
                measured = measured_straightness(node)
                expected = straightness_radial(
                    k, canonicalize(theta, math.atan2(y, x))
                )
                worst_formula = max(worst_formula, abs(measured - expected))
                across_rings.append(measured)
            worst_spread = max(worst_spread, max(across_rings) - min(across_rings))
    return worst_formula, worst_spread

"""Simulation sweeps: all-pairs straightness across generator parameters."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .generators import GridSpec, RadialSpec, generate_radioconcentric, generate_rectilinear
from .metrics import StraightnessSummary, summarize

MAX_GRID_SWEEP_SIZE = 50  # pair count grows ~s^4; keep default workloads sane

# Side meshing used by the radial simulation sweep.  Corner-only graphs
# (subdivision 1) connect every privileged position directly and their mean
# straightness stays above 0.9 for any spoke count; real intermediate
# destinations along the sides are needed for the sweep to discriminate
# between few and many spokes.
DEFAULT_SWEEP_SUBDIVISION = 4


@dataclass(frozen=True)
class SweepResult:
    """One sweep cell: generator parameters, aggregate, wall time."""

    parameters: dict[str, int]
    summary: StraightnessSummary
    wall_time_ms: int


def _timed_summary(graph, threads):
    start = time.perf_counter()
    summary = summarize(graph, threads=threads)
    elapsed_ms = max(0, int(round((time.perf_counter() - start) * 1000.0)))
    return summary, elapsed_ms


def sweep_rectilinear(
    sizes: Iterable[int], threads: int | None = None
) -> list[SweepResult]:
    """All-pairs straightness of unit grids, one result per size."""
    results = []
    for size in sizes:
        if not 1 <= size <= MAX_GRID_SWEEP_SIZE:
            raise ValueError(
                f"grid size {size} outside 1..{MAX_GRID_SWEEP_SIZE}"
            )
        graph = generate_rectilinear(GridSpec(size))
        summary, elapsed_ms = _timed_summary(graph, threads)
        results.append(
            SweepResult({"squares_per_side": size}, summary, elapsed_ms)
        )
    return results


def sweep_radial(
    radii: Iterable[int],
    rings: Iterable[int],
    subdivision: int = DEFAULT_SWEEP_SUBDIVISION,
    threads: int | None = None,
) -> list[SweepResult]:
    """All-pairs straightness of radio-concentric networks over (k, m)."""
    rings = list(rings)
    results = []
    for radii_count in radii:
        for rings_count in rings:
            spec = RadialSpec(radii_count, rings_count, subdivision)
            graph = generate_radioconcentric(spec)
            summary, elapsed_ms = _timed_summary(graph, threads)
            results.append(
                SweepResult(
                    {"radii": radii_count, "rings": rings_count},
                    summary,
                    elapsed_ms,
                )
            )
    return results

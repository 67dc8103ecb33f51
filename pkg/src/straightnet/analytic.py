"""Closed-form straightness of center-to-periphery routes.

Angles are plain floats in radians.  A move from the network center is
described by its direction ``alpha`` measured from the x axis; a
radio-concentric network is described by its integer spoke count ``k``,
from which the sector angle ``theta = 2*pi/k`` is always derived (passing
a free-floating theta would allow sector angles no integer spoke count can
produce).
"""

from __future__ import annotations

import math
from typing import NamedTuple

RIGHT_ANGLE = math.pi / 2.0


def sector_angle(radii_count: int) -> float:
    """Angle between consecutive spokes, ``2*pi / k`` for integer k >= 3."""
    if radii_count != int(radii_count):
        raise ValueError("radii_count must be an integer")
    if radii_count < 3:
        raise ValueError("a radio-concentric network needs at least 3 radii")
    return 2.0 * math.pi / radii_count


def canonicalize(theta: float, alpha: float) -> float:
    """Reduce a direction to the representative range ``[0, theta/2]``.

    Straightness is periodic in the sector angle (rotating by a whole
    sector maps the network onto itself) and symmetric about each sector
    bisector, so every direction has an equivalent in the first
    half-sector.  The reduction is rotation (mod theta) followed by a
    reflection when the remainder exceeds the bisector.
    """
    if not (math.isfinite(theta) and theta > 0.0):
        raise ValueError("theta must be finite and positive")
    if not math.isfinite(alpha):
        raise ValueError("alpha must be finite")
    a = math.fmod(alpha, theta)
    if a < 0.0:
        a += theta
    if a > 0.5 * theta:
        a = theta - a
    return a


def straightness_rectilinear(alpha: float) -> float:
    """Center-to-periphery straightness on a perfect unit grid.

    ``1 / (cos a + sin a)`` on the canonical half-sector; the grid behaves
    like a radio-concentric network with four right-angle sectors, so any
    finite direction is accepted.  Values lie in ``[1/sqrt(2), 1]``.
    """
    a = canonicalize(RIGHT_ANGLE, alpha)
    return 1.0 / (math.cos(a) + math.sin(a))


def straightness_radial(radii_count: int, alpha: float) -> float:
    """Center-to-periphery straightness on a perfect radio-concentric network.

    Evaluates ``1 / (cos a + sin a / tan((pi-theta)/2) + sin a /
    sin((pi-theta)/2))`` with ``theta = 2*pi/radii_count`` after reducing
    ``alpha`` to the first half-sector, so arbitrary directions show the
    periodic ripple pattern.  Values lie in ``(0, 1]`` with the sector
    minimum at the bisector.
    """
    theta = sector_angle(radii_count)
    a = canonicalize(theta, alpha)
    half_apex = 0.5 * (math.pi - theta)
    return 1.0 / (
        math.cos(a)
        + math.sin(a) / math.tan(half_apex)
        + math.sin(a) / math.sin(half_apex)
    )


class MeshRoutes(NamedTuple):
    """Candidate center-to-side routes inside one angular sector."""

    crow_flies: float
    via_first_radius: float
    via_second_radius: float


def mesh_routes(radii_count: int, alpha: float) -> MeshRoutes:
    """Explicit route geometry to a point on the unit-ring side chord.

    The destination is where the ray at angle ``alpha`` crosses the chord
    between the unit-ring corners of the first sector.  On the network the
    point can only be reached along one of the two bounding spokes and then
    along the chord, so both candidate lengths are returned together with
    the straight-line distance.  Built from plain coordinate geometry, and
    therefore usable as an independent oracle for the closed form.
    """
    theta = sector_angle(radii_count)
    if not (math.isfinite(alpha) and 0.0 <= alpha <= theta):
        raise ValueError("alpha must lie within the first sector [0, theta]")
    ax, ay = 1.0, 0.0
    bx, by = math.cos(theta), math.sin(theta)
    ux, uy = math.cos(alpha), math.sin(alpha)
    # Ray/chord intersection: scale the unit direction until it meets the
    # chord line through A and B (normal form avoids solving a 2x2 system).
    nx, ny = ay - by, bx - ax
    t = (ax * nx + ay * ny) / (ux * nx + uy * ny)
    px, py = t * ux, t * uy
    return MeshRoutes(
        crow_flies=math.hypot(px, py),
        via_first_radius=1.0 + math.hypot(px - ax, py - ay),
        via_second_radius=1.0 + math.hypot(px - bx, py - by),
    )


def mesh_oracle_radial(radii_count: int, alpha: float) -> float:
    """Straightness from the explicit two-route geometry of one sector."""
    routes = mesh_routes(radii_count, alpha)
    return routes.crow_flies / min(routes.via_first_radius, routes.via_second_radius)


def analytic_curve(
    kind: str,
    radii_count: int | None,
    alpha_steps: int,
    alpha_max: float = math.pi / 4.0,
) -> list[tuple[float, float]]:
    """Sample one straightness curve on a uniform direction grid.

    ``kind`` is ``"rectilinear"`` or ``"radial"`` (the latter requires
    ``radii_count``).  Directions run from 0 to ``alpha_max`` inclusive in
    ``alpha_steps`` samples; since the formulas reduce internally, radial
    curves show their full ripple pattern over the range.
    """
    if alpha_steps < 2:
        raise ValueError("alpha_steps must be at least 2")
    if not (math.isfinite(alpha_max) and alpha_max > 0.0):
        raise ValueError("alpha_max must be finite and positive")
    if kind == "rectilinear":
        evaluate = straightness_rectilinear
    elif kind == "radial":
        if radii_count is None:
            raise ValueError("radial curves need a radii_count")
        evaluate = lambda a: straightness_radial(radii_count, a)  # noqa: E731
    else:
        raise ValueError(f"unknown network kind {kind!r}")
    rows = []
    for i in range(alpha_steps):
        alpha = alpha_max * i / (alpha_steps - 1)
        rows.append((alpha, evaluate(alpha)))
    return rows


def dominance_fraction(radii_count: int, samples: int = 10001) -> float:
    """Share of directions in ``[0, pi/4]`` where the radial network wins.

    Uniform grid comparison of the two curves (ties count as a radial
    win).  Reported as a diagnostic; the crossover claim for small spoke
    counts holds for the direction-averaged curves rather than pointwise.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    wins = 0
    for i in range(samples):
        alpha = (math.pi / 4.0) * i / (samples - 1)
        if straightness_radial(radii_count, alpha) >= straightness_rectilinear(alpha):
            wins += 1
    return wins / samples

"""Polyline paths and their evaluation: length, penetrated obstacles, plausibility.

The plausibility of a path is the bottleneck over the effective degrees of
every obstacle it penetrates (1.0 for a path that penetrates nothing).
Crossing the same obstacle several times counts once; the minimum is
idempotent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry
from .world import Circle, Configuration, Scenario, Shape, effective_degree


@dataclass(frozen=True)
class Path:
    """An ordered polyline of configurations; consecutive points distinct."""

    waypoints: tuple[Configuration, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "waypoints", tuple(self.waypoints))
        if len(self.waypoints) < 2:
            raise ValueError("a path needs at least two waypoints")
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            if a == b:
                raise ValueError(f"consecutive duplicate waypoint ({a.x}, {a.y})")

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.waypoints)))


@dataclass(frozen=True)
class PathEvaluation:
    length: float
    plausibility: float
    penetrated: frozenset[str]


def endpoints(p: Path) -> tuple[Configuration, Configuration]:
    """The (start, end) pair of a path; loops are allowed by the type."""
    return p.waypoints[0], p.waypoints[-1]


def _segment_crosses(shape: Shape, ax, ay, bx, by, footprint: float) -> bool:
    if isinstance(shape, Circle):
        return geometry.segment_crosses_circle(
            shape.cx, shape.cy, shape.radius, ax, ay, bx, by, footprint
        )
    return geometry.segment_crosses_rect(
        shape.xmin, shape.ymin, shape.xmax, shape.ymax, ax, ay, bx, by, footprint
    )


def segment_crossings(
    a: Configuration, b: Configuration, scenario: Scenario
) -> frozenset[str]:
    """Ids of obstacles whose footprint-inflated shape the open segment enters.

    Grazing tangency never counts (see geometry module).
    """
    if a == b:
        raise ValueError("degenerate segment: endpoints coincide")
    r = scenario.profile.radius
    hit = [
        o.id
        for o in scenario.obstacles
        if _segment_crosses(o.shape, a.x, a.y, b.x, b.y, r)
    ]
    return frozenset(hit)


def evaluate_path(p: Path, scenario: Scenario) -> PathEvaluation:
    """Length, penetrated obstacle set and bottleneck plausibility of a path."""
    length = 0.0
    penetrated: set[str] = set()
    wps = p.waypoints
    for a, b in zip(wps, wps[1:]):
        length += math.hypot(b.x - a.x, b.y - a.y)
        penetrated |= segment_crossings(a, b, scenario)
    if penetrated:
        plausibility = min(
            effective_degree(scenario.obstacle_by_id(oid), scenario.profile)
            for oid in penetrated
        )
    else:
        plausibility = 1.0
    return PathEvaluation(length, plausibility, frozenset(penetrated))

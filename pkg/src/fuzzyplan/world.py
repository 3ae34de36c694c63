"""Workspace model: bounds, degree-rated obstacles, robot profile, validation.

Everything here is an immutable value object and every operation is a pure
function, so scenarios can be shared freely across threads.

Traversal-difficulty degrees live in [0, 1]: degree 1 means the obstacle is
no hindrance at all, degree 0 means it can never be entered. Obstacle and
Scenario construction deliberately accept out-of-range data so that
validate_scenario can report it as a violation instead of blowing up.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import geometry


class OutOfBoundsError(ValueError):
    """A configuration lies outside the workspace bounds."""


def check_degree(value: float) -> float:
    """Validate a traversal-difficulty degree, returning it as a float."""
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"traversal degree {value!r} outside [0, 1]")
    return value


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    radius: float


Shape = Rect | Circle


@dataclass(frozen=True)
class Obstacle:
    """A shape with a traversal-difficulty degree attached."""

    id: str
    shape: Shape
    degree: float


@dataclass(frozen=True)
class Configuration:
    """A vehicle position (position-only configuration, no orientation)."""

    x: float
    y: float


@dataclass(frozen=True)
class RobotProfile:
    """Footprint disc radius plus a softness (flexibility) parameter.

    Softness raises effective traversal degrees: a perfectly rigid robot
    (softness 0) sees the raw degrees, a more flexible one finds every
    penetrable obstacle easier to cross.
    """

    radius: float = 0.0
    softness: float = 0.0


@dataclass(frozen=True)
class Scenario:
    bounds: Rect
    obstacles: tuple[Obstacle, ...]
    start: Configuration
    goal: Configuration
    profile: RobotProfile = field(default_factory=RobotProfile)

    def __post_init__(self) -> None:
        object.__setattr__(self, "obstacles", tuple(self.obstacles))

    def obstacle_by_id(self, obstacle_id: str) -> Obstacle:
        for o in self.obstacles:
            if o.id == obstacle_id:
                return o
        raise KeyError(obstacle_id)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_scenario: violations are data, not exceptions."""

    violations: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def effective_degree(obstacle: Obstacle, profile: RobotProfile) -> float:
    """Traversal degree of an obstacle as seen by this robot.

    A softness of phi maps degree d to d ** (1 / (1 + phi)): the identity for
    a rigid robot, monotone increasing in phi, and fixing 0 and 1 (an
    impenetrable obstacle stays impenetrable no matter how soft the robot).
    """
    d = check_degree(obstacle.degree)
    phi = profile.softness
    if phi == 0.0 or d == 0.0 or d == 1.0:
        return d
    return d ** (1.0 / (1.0 + phi))


def in_bounds(q: Configuration, bounds: Rect) -> bool:
    return bounds.xmin <= q.x <= bounds.xmax and bounds.ymin <= q.y <= bounds.ymax


def _disc_overlaps(shape: Shape, x: float, y: float, footprint: float) -> bool:
    if isinstance(shape, Circle):
        return geometry.disc_overlaps_circle(
            shape.cx, shape.cy, shape.radius, x, y, footprint
        )
    return geometry.disc_overlaps_rect(
        shape.xmin, shape.ymin, shape.xmax, shape.ymax, x, y, footprint
    )


def is_free(q: Configuration, scenario: Scenario) -> bool:
    """Classical free-space membership: the footprint disc at q meets no shape.

    Degrees are irrelevant here; every obstacle blocks. Raises
    OutOfBoundsError for a configuration outside the bounds, which is a
    different condition from "occupied".
    """
    if not in_bounds(q, scenario.bounds):
        raise OutOfBoundsError(f"configuration ({q.x}, {q.y}) outside bounds")
    r = scenario.profile.radius
    for o in scenario.obstacles:
        if _disc_overlaps(o.shape, q.x, q.y, r):
            return False
    return True


def _check_shape(prefix: str, shape: Shape, out: list[str]) -> None:
    if isinstance(shape, Rect):
        if not shape.xmin < shape.xmax:
            out.append(f"{prefix}.shape: xmin must be < xmax")
        if not shape.ymin < shape.ymax:
            out.append(f"{prefix}.shape: ymin must be < ymax")
    else:
        if not shape.radius > 0:
            out.append(f"{prefix}.shape: radius must be > 0")


def _check_occupancy(
    name: str, q: Configuration, s: Scenario, violations: list[str], warnings: list[str]
) -> None:
    r = s.profile.radius
    for o in s.obstacles:
        if _disc_overlaps(o.shape, q.x, q.y, r):
            if o.degree == 0:
                violations.append(
                    f"{name}: inside impenetrable obstacle {o.id!r} (degree 0)"
                )
            else:
                warnings.append(
                    f"{name}: inside penetrable obstacle {o.id!r} "
                    f"(degree {o.degree}); fine for fuzzy planning, "
                    "unreachable classically"
                )


def validate_scenario(s: Scenario) -> ValidationReport:
    """Check every scenario invariant, collecting violations per field."""
    violations: list[str] = []
    warnings: list[str] = []

    if not (s.bounds.xmin < s.bounds.xmax and s.bounds.ymin < s.bounds.ymax):
        violations.append("bounds: empty or inverted rectangle")

    geometry_ok = not violations
    seen: set[str] = set()
    for i, o in enumerate(s.obstacles):
        prefix = f"obstacles[{i}]"
        if o.id in seen:
            violations.append(f"{prefix}.id: duplicate id {o.id!r}")
        seen.add(o.id)
        before = len(violations)
        _check_shape(prefix, o.shape, violations)
        if not 0.0 <= o.degree <= 1.0:
            violations.append(f"{prefix}.degree: degree {o.degree} out of [0,1]")
        geometry_ok = geometry_ok and len(violations) == before

    if s.profile.radius < 0:
        violations.append("profile.radius: must be >= 0")
        geometry_ok = False
    if s.profile.softness < 0:
        violations.append("profile.softness: must be >= 0")

    if s.start == s.goal:
        violations.append("start: start equals goal")

    for name, q in (("start", s.start), ("goal", s.goal)):
        if not in_bounds(q, s.bounds):
            violations.append(f"{name}: outside workspace bounds")
        elif geometry_ok:
            # Occupancy only makes sense once the shapes are well-formed.
            _check_occupancy(name, q, s, violations, warnings)

    return ValidationReport(tuple(violations), tuple(warnings))

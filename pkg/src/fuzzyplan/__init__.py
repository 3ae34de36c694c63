"""Planar motion planning with per-obstacle traversal-difficulty degrees.

Instead of treating every obstacle as forbidden, each one carries a degree
in [0, 1]: 1 means it is no obstacle at all, 0 means it must be avoided.
Paths trade length against plausibility (the bottleneck over the degrees of
whatever they penetrate); the planner returns the whole trade-off front and
selects one candidate by rule, with a classical avoid-everything baseline
and seeded random path policies alongside.
"""

from .evaluation import (
    Path,
    PathEvaluation,
    endpoints,
    evaluate_path,
    segment_crossings,
)
from .planner import (
    FuzzyPlan,
    NoPlausiblePathError,
    RandomPolicy,
    SelectionRule,
    draw_indices,
    make_random_policy,
    plan_fuzzy,
    replan,
    sample,
    select,
)
from .search import (
    GridGraph,
    build_grid,
    classical_shortest,
    dominates,
    enumerate_paths_oracle,
    pareto_search,
)
from .world import (
    Circle,
    Configuration,
    Obstacle,
    OutOfBoundsError,
    Rect,
    RobotProfile,
    Scenario,
    ValidationReport,
    check_degree,
    effective_degree,
    is_free,
    validate_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "Circle",
    "Configuration",
    "FuzzyPlan",
    "GridGraph",
    "NoPlausiblePathError",
    "Obstacle",
    "OutOfBoundsError",
    "Path",
    "PathEvaluation",
    "RandomPolicy",
    "Rect",
    "RobotProfile",
    "Scenario",
    "SelectionRule",
    "ValidationReport",
    "build_grid",
    "check_degree",
    "classical_shortest",
    "dominates",
    "draw_indices",
    "effective_degree",
    "endpoints",
    "enumerate_paths_oracle",
    "evaluate_path",
    "is_free",
    "make_random_policy",
    "pareto_search",
    "plan_fuzzy",
    "replan",
    "sample",
    "segment_crossings",
    "select",
    "validate_scenario",
]

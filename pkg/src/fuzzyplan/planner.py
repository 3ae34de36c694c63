"""The n-valued fuzzy planner: candidate fronts, selection rules, random policies.

plan_fuzzy identifies the Pareto-optimal candidate paths between start and
goal and then picks one by a selection rule; n (the number of candidates) is
emergent, not chosen up front. A FuzzyPlan can also be turned into a seeded
random policy that draws one of the candidates by weight.

All planning functions are pure; plans and policies are immutable and safe
to share. Samplers own their generator state, so concurrent sampling just
needs independent seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .evaluation import Path, PathEvaluation, evaluate_path
from .search import build_grid, dominates, lengths_close, pareto_search
from .world import Configuration, Obstacle, Scenario, check_degree, in_bounds

WEIGHT_SUM_TOL = 1e-12


class NoPlausiblePathError(Exception):
    """Every route from start to goal penetrates something impenetrable."""


@dataclass(frozen=True)
class SelectionRule:
    """How to pick one candidate from the front.

    * lex:        most plausible candidate, shortest among equals.
    * threshold:  shortest candidate whose plausibility reaches lambda_min,
                  falling back to the most plausible one if none does.
    * weighted:   maximize w*plausibility - (1-w)*length/length_max.
    """

    mode: str
    lambda_min: float | None = None
    weight: float | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("lex", "threshold", "weighted"):
            raise ValueError(f"unknown selection mode {self.mode!r}")
        if self.mode == "threshold":
            if self.lambda_min is None:
                raise ValueError("threshold rule needs lambda_min")
            check_degree(self.lambda_min)
        if self.mode == "weighted":
            if self.weight is None:
                raise ValueError("weighted rule needs a weight")
            if not 0.0 <= self.weight <= 1.0:
                raise ValueError(f"weight {self.weight} outside [0, 1]")

    @classmethod
    def lex(cls) -> "SelectionRule":
        return cls("lex")

    @classmethod
    def threshold(cls, lambda_min: float) -> "SelectionRule":
        return cls("threshold", lambda_min=lambda_min)

    @classmethod
    def weighted(cls, weight: float) -> "SelectionRule":
        return cls("weighted", weight=weight)

    def describe(self) -> str:
        if self.mode == "threshold":
            return f"threshold={self.lambda_min:g}"
        if self.mode == "weighted":
            return f"weighted={self.weight:g}"
        return "lex"


@dataclass(frozen=True)
class FuzzyPlan:
    """An ordered candidate set (decreasing plausibility) plus the pick."""

    candidates: tuple[tuple[Path, PathEvaluation], ...]
    chosen: int
    rule: SelectionRule

    def __post_init__(self) -> None:
        object.__setattr__(self, "candidates", tuple(self.candidates))
        if not self.candidates:
            raise ValueError("a plan needs at least one candidate")
        if not 0 <= self.chosen < len(self.candidates):
            raise ValueError("chosen index out of range")
        first = self.candidates[0][0]
        for path, _ in self.candidates[1:]:
            if (
                path.waypoints[0] != first.waypoints[0]
                or path.waypoints[-1] != first.waypoints[-1]
            ):
                raise ValueError("candidates disagree on start/goal")
        for _, e1 in self.candidates:
            for _, e2 in self.candidates:
                if e1 is not e2 and dominates(e1, e2):
                    raise ValueError("candidates must be mutually non-dominated")

    @property
    def n(self) -> int:
        return len(self.candidates)

    @property
    def chosen_path(self) -> Path:
        return self.candidates[self.chosen][0]

    @property
    def chosen_evaluation(self) -> PathEvaluation:
        return self.candidates[self.chosen][1]


@dataclass(frozen=True)
class RandomPolicy:
    """Probability weights aligned with a plan's candidates."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise ValueError("a policy needs at least one weight")
        if any(w < 0.0 for w in self.weights):
            raise ValueError("weights must be non-negative")
        total = sum(self.weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights sum to {total!r}, not 1")


def select(
    candidates: list[tuple[Path, PathEvaluation]] | tuple, rule: SelectionRule
) -> int:
    """Index of the candidate the rule picks; candidates must be non-empty."""
    if not candidates:
        raise ValueError("no candidates to select from")
    evals = [ev for _, ev in candidates]

    if rule.mode == "lex":
        return _argbest(evals, key=lambda e: (-e.plausibility, e.length))

    if rule.mode == "threshold":
        qualifying = [
            i for i, e in enumerate(evals) if e.plausibility >= rule.lambda_min
        ]
        if qualifying:
            best = qualifying[0]
            for i in qualifying[1:]:
                if evals[i].length < evals[best].length:
                    best = i
            return best
        # Nothing clears the bar: degrade to the most plausible candidate
        # rather than returning no path at all.
        return _argbest(evals, key=lambda e: (-e.plausibility, e.length))

    # weighted
    length_max = max(e.length for e in evals)
    best = 0
    best_key = None
    for i, e in enumerate(evals):
        utility = rule.weight * e.plausibility - (1.0 - rule.weight) * (
            e.length / length_max
        )
        key = (utility, e.plausibility)
        if best_key is None or key > best_key:
            best = i
            best_key = key
    return best


def _argbest(evals, key) -> int:
    best = 0
    best_key = key(evals[0])
    for i in range(1, len(evals)):
        k = key(evals[i])
        if k < best_key:
            best = i
            best_key = k
    return best


def _with_exact_endpoints(
    path: Path, start: Configuration, goal: Configuration
) -> Path:
    """Prepend/append the exact endpoints when the grid snapped them away."""
    wps = list(path.waypoints)
    if wps[0] != start:
        wps.insert(0, start)
    if wps[-1] != goal:
        wps.append(goal)
    if len(wps) == len(path.waypoints):
        return path
    return Path(tuple(wps))


def plan_fuzzy(
    scenario: Scenario, resolution: float, rule: SelectionRule
) -> FuzzyPlan:
    """Plan between scenario.start and scenario.goal on a fresh grid.

    Candidates are the Pareto front, remapped to the exact endpoints (the
    connector segments are evaluated like any other, so they can lower a
    candidate's plausibility or even disqualify it). Raises
    NoPlausiblePathError when nothing with positive plausibility remains.
    """
    grid = build_grid(scenario, resolution)
    front = pareto_search(grid)

    candidates: list[tuple[Path, PathEvaluation]] = []
    for path, ev in front:
        full = _with_exact_endpoints(path, scenario.start, scenario.goal)
        if full is not path:
            ev = evaluate_path(full, scenario)
            if ev.plausibility <= 0.0:
                continue
        candidates.append((full, ev))

    # Connectors may disturb the front: restore order and non-domination.
    candidates.sort(key=lambda pe: (-pe[1].plausibility, pe[1].length))
    kept: list[tuple[Path, PathEvaluation]] = []
    for pair in candidates:
        ev = pair[1]
        if any(dominates(other[1], ev) for other in candidates if other is not pair):
            continue
        if kept and kept[-1][1].plausibility == ev.plausibility and lengths_close(
            kept[-1][1].length, ev.length
        ):
            continue
        kept.append(pair)

    if not kept:
        raise NoPlausiblePathError(
            "no route with positive plausibility connects start and goal"
        )
    return FuzzyPlan(tuple(kept), select(kept, rule), rule)


def replan(
    scenario: Scenario,
    current: Configuration,
    degree_updates: dict[str, float],
    resolution: float,
    rule: SelectionRule,
) -> FuzzyPlan:
    """Plan again from the robot's current position with revised degrees.

    The original scenario is untouched; unknown obstacle ids are rejected.
    """
    if not in_bounds(current, scenario.bounds):
        raise ValueError(f"current position ({current.x}, {current.y}) out of bounds")
    known = {o.id for o in scenario.obstacles}
    for oid, value in degree_updates.items():
        if oid not in known:
            raise ValueError(f"degree update for unknown obstacle {oid!r}")
        check_degree(value)
    obstacles = tuple(
        Obstacle(o.id, o.shape, degree_updates[o.id])
        if o.id in degree_updates
        else o
        for o in scenario.obstacles
    )
    revised = replace(scenario, start=current, obstacles=obstacles)
    return plan_fuzzy(revised, resolution, rule)


def make_random_policy(plan: FuzzyPlan, weighting: str = "uniform") -> RandomPolicy:
    """Turn a plan into a distribution over its candidates.

    "uniform" gives each candidate 1/n; "plausibility" weights each by its
    plausibility (all candidates have positive plausibility, so this is
    always well defined).
    """
    n = plan.n
    if weighting == "uniform":
        return RandomPolicy(tuple(1.0 / n for _ in range(n)))
    if weighting == "plausibility":
        lams = [ev.plausibility for _, ev in plan.candidates]
        total = sum(lams)
        return RandomPolicy(tuple(lam / total for lam in lams))
    raise ValueError(f"unknown weighting {weighting!r}")


def draw_indices(policy: RandomPolicy, seed: int, count: int) -> list[int]:
    """Draw candidate indices; the same seed reproduces the same sequence.

    Uses the stdlib Mersenne Twister, seeded per call chain.
    """
    rng = random.Random(seed)
    cumulative: list[float] = []
    acc = 0.0
    for w in policy.weights:
        acc += w
        cumulative.append(acc)
    cumulative[-1] = 1.0  # absorb float residue so every draw lands
    out: list[int] = []
    for _ in range(count):
        r = rng.random()
        for i, c in enumerate(cumulative):
            if r < c:
                out.append(i)
                break
        else:
            out.append(len(cumulative) - 1)
    return out


def sample(policy: RandomPolicy, seed: int) -> int:
    """First draw of the seeded stream: index j with probability weights[j]."""
    return draw_indices(policy, seed, 1)[0]

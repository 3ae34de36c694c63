"""Lattice discretization and path search.

Three routes from start to goal:

* classical_shortest  - shortest path touching no obstacle at all,
* pareto_search       - the exact Pareto front over (length, plausibility),
* enumerate_paths_oracle - brute-force enumeration, the independent check.

Grid path lengths are multiples of the cell size: a straight steps plus b
diagonal steps give (a + b*sqrt(2)) * h. The searches carry (a, b) as exact
integers, so length comparison and tie detection never touch a tolerance;
floats only appear in the reported evaluations.

Plausibility is a bottleneck objective over finitely many effective degrees,
so the front is found by one shortest-path pass per candidate plausibility
level: the minimum-length path among those penetrating nothing rated below
the level. Ties are broken toward the lexicographically smallest node
sequence via a goal-rooted distance table and a greedy forward walk, which
keeps classical and fuzzy answers aligned when all degrees collapse.
"""

from __future__ import annotations

import math
from heapq import heappop, heappush

from . import geometry
from .evaluation import Path, PathEvaluation, evaluate_path
from .world import Circle, Configuration, Scenario, effective_degree, is_free

LENGTH_REL_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)
_EMPTY: frozenset[str] = frozenset()

# Gate value of an edge = min effective degree over the obstacles it crosses.
# Crossing-free edges get a sentinel above every degree; filtering with this
# threshold keeps exactly them.
_NO_CROSSING_GATE = 2.0
_CLASSICAL_THRESHOLD = 1.5


def lengths_close(l1: float, l2: float) -> bool:
    return math.isclose(l1, l2, rel_tol=LENGTH_REL_TOL)


def dominates(e1: PathEvaluation, e2: PathEvaluation) -> bool:
    """Shorter-or-equal and at-least-as-plausible, at least one strictly."""
    close = lengths_close(e1.length, e2.length)
    len_le = close or e1.length < e2.length
    len_lt = e1.length < e2.length and not close
    return (
        len_le
        and e1.plausibility >= e2.plausibility
        and (len_lt or e1.plausibility > e2.plausibility)
    )


def _len_less(a1: int, b1: int, a2: int, b2: int) -> bool:
    """Exact a1 + b1*sqrt(2) < a2 + b2*sqrt(2) for integers."""
    da = a1 - a2
    db = b1 - b2
    if da == 0 and db == 0:
        return False
    if da <= 0 and db <= 0:
        return True
    if da >= 0 and db >= 0:
        return False
    if da < 0:  # db > 0
        return 2 * db * db < da * da
    return da * da < 2 * db * db  # da > 0, db < 0


class GridGraph:
    """8-connected lattice over the bounds with crossing-annotated edges.

    Nodes are (i, j) lattice indices; node (i, j) sits at
    (xmin + i*h, ymin + j*h). Every lattice point inside the bounds is a
    node, including points inside obstacles: infeasible edges are marked by
    their crossings, and pruning is the searches' business.
    """

    def __init__(
        self,
        scenario: Scenario,
        resolution: float,
        nx: int,
        ny: int,
        nbrs: list[tuple[tuple[int, int, float], ...]],
        edge_crossed: dict[tuple[int, int], frozenset[str]],
        effective: dict[str, float],
        start: int,
        goal: int,
    ):
        self.scenario = scenario
        self.resolution = resolution
        self.nx = nx
        self.ny = ny
        self._nbrs = nbrs
        self._edge_crossed = edge_crossed
        self.effective = effective
        self._start = start
        self._goal = goal

    # -- node bookkeeping ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return self.nx * self.ny

    @property
    def start_node(self) -> tuple[int, int]:
        return divmod(self._start, self.ny)

    @property
    def goal_node(self) -> tuple[int, int]:
        return divmod(self._goal, self.ny)

    def nodes(self):
        for i in range(self.nx):
            for j in range(self.ny):
                yield (i, j)

    def node_position(self, node: tuple[int, int]) -> Configuration:
        i, j = node
        b = self.scenario.bounds
        return Configuration(b.xmin + i * self.resolution, b.ymin + j * self.resolution)

    def neighbors(self, node: tuple[int, int]) -> list[tuple[int, int]]:
        i, j = node
        return [divmod(m, self.ny) for m, _, _ in self._nbrs[i * self.ny + j]]

    def edges(self):
        """Each undirected edge once: (node_a, node_b, length, crossed)."""
        for (k, m), crossed in sorted(self._edge_crossed.items()):
            ki, kj = divmod(k, self.ny)
            mi, mj = divmod(m, self.ny)
            diag = ki != mi and kj != mj
            length = self.resolution * (_SQRT2 if diag else 1.0)
            yield (ki, kj), (mi, mj), length, crossed

    def edge_crossings(
        self, a: tuple[int, int], b: tuple[int, int]
    ) -> frozenset[str]:
        ka = a[0] * self.ny + a[1]
        kb = b[0] * self.ny + b[1]
        if ka > kb:
            ka, kb = kb, ka
        return self._edge_crossed[(ka, kb)]

    def _walk_to_path(self, walk: list[int]) -> Path:
        b = self.scenario.bounds
        h = self.resolution
        ny = self.ny
        return Path(
            tuple(
                Configuration(b.xmin + (k // ny) * h, b.ymin + (k % ny) * h)
                for k in walk
            )
        )


def build_grid(scenario: Scenario, resolution: float) -> GridGraph:
    """Discretize the scenario; deterministic for identical inputs.

    Raises ValueError for a non-positive or too-coarse resolution, or when
    start and goal collapse onto the same lattice node.
    """
    bounds = scenario.bounds
    width = bounds.xmax - bounds.xmin
    height = bounds.ymax - bounds.ymin
    if resolution <= 0:
        raise ValueError("resolution must be > 0")
    if resolution > min(width, height):
        raise ValueError(
            f"resolution {resolution} too coarse for {width} x {height} bounds"
        )
    nx = int(math.floor(width / resolution + 1e-9)) + 1
    ny = int(math.floor(height / resolution + 1e-9)) + 1

    x0 = bounds.xmin
    y0 = bounds.ymin
    r = scenario.profile.radius
    effective = {
        o.id: effective_degree(o, scenario.profile) for o in scenario.obstacles
    }

    # Per-obstacle data unpacked into flat tuples; the inflated bounding box
    # rejects most segment tests before any geometry runs.
    circles = []
    rects = []
    for o in scenario.obstacles:
        s = o.shape
        if isinstance(s, Circle):
            rr = s.radius + r
            circles.append(
                (o.id, s.cx, s.cy, s.radius, s.cx - rr, s.cy - rr, s.cx + rr, s.cy + rr)
            )
        else:
            rects.append(
                (
                    o.id,
                    s.xmin,
                    s.ymin,
                    s.xmax,
                    s.ymax,
                    s.xmin - r,
                    s.ymin - r,
                    s.xmax + r,
                    s.ymax + r,
                )
            )

    xs = [x0 + i * resolution for i in range(nx)]
    ys = [y0 + j * resolution for j in range(ny)]

    nbrs: list[list[tuple[int, int, float]]] = [[] for _ in range(nx * ny)]
    edge_crossed: dict[tuple[int, int], frozenset[str]] = {}

    seg_circle = geometry.segment_crosses_circle
    seg_rect = geometry.segment_crosses_rect

    for i in range(nx):
        ax = xs[i]
        for j in range(ny):
            ay = ys[j]
            k = i * ny + j
            for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
                i2 = i + di
                j2 = j + dj
                if not (0 <= i2 < nx and 0 <= j2 < ny):
                    continue
                bx = xs[i2]
                by = ys[j2]
                sx0, sx1 = (ax, bx) if ax <= bx else (bx, ax)
                sy0, sy1 = (ay, by) if ay <= by else (by, ay)
                hit: list[str] | None = None
                for oid, cx, cy, rad, bx0, by0, bx1, by1 in circles:
                    if sx1 <= bx0 or sx0 >= bx1 or sy1 <= by0 or sy0 >= by1:
                        continue
                    if seg_circle(cx, cy, rad, ax, ay, bx, by, r):
                        if hit is None:
                            hit = [oid]
                        else:
                            hit.append(oid)
                for oid, x1, y1, x2, y2, bx0, by0, bx1, by1 in rects:
                    if sx1 <= bx0 or sx0 >= bx1 or sy1 <= by0 or sy0 >= by1:
                        continue
                    if seg_rect(x1, y1, x2, y2, ax, ay, bx, by, r):
                        if hit is None:
                            hit = [oid]
                        else:
                            hit.append(oid)
                m = i2 * ny + j2
                if hit is None:
                    crossed = _EMPTY
                    gate = _NO_CROSSING_GATE
                else:
                    crossed = frozenset(hit)
                    gate = min(effective[oid] for oid in hit)
                diag = 1 if (di and dj) else 0
                nbrs[k].append((m, diag, gate))
                nbrs[m].append((k, diag, gate))
                edge_crossed[(k, m) if k < m else (m, k)] = crossed

    def nearest(q: Configuration) -> int:
        i = int(math.floor((q.x - x0) / resolution + 0.5))
        j = int(math.floor((q.y - y0) / resolution + 0.5))
        i = min(max(i, 0), nx - 1)
        j = min(max(j, 0), ny - 1)
        return i * ny + j

    start = nearest(scenario.start)
    goal = nearest(scenario.goal)
    if start == goal:
        raise ValueError(
            "resolution too coarse: start and goal map to the same lattice node"
        )

    return GridGraph(
        scenario,
        resolution,
        nx,
        ny,
        [tuple(lst) for lst in nbrs],
        edge_crossed,
        effective,
        start,
        goal,
    )


def _dijkstra_to_goal(
    grid: GridGraph, threshold: float
) -> list[tuple[int, int] | None]:
    """Exact (straight, diagonal) step counts to the goal over passable edges.

    An edge is passable when its gate (minimum effective degree over its
    crossings) reaches the threshold.
    """
    nbrs = grid._nbrs
    dist: list[tuple[int, int] | None] = [None] * grid.node_count
    goal = grid._goal
    dist[goal] = (0, 0)
    heap: list[tuple[float, int, int, int]] = [(0.0, goal, 0, 0)]
    while heap:
        _, k, a, b = heappop(heap)
        if dist[k] != (a, b):
            continue  # stale entry
        for m, diag, gate in nbrs[k]:
            if gate < threshold:
                continue
            if diag:
                na, nb = a, b + 1
            else:
                na, nb = a + 1, b
            cur = dist[m]
            if cur is None or _len_less(na, nb, cur[0], cur[1]):
                dist[m] = (na, nb)
                heappush(heap, (na + nb * _SQRT2, m, na, nb))
    return dist


def _lex_walk(
    grid: GridGraph, dist: list[tuple[int, int] | None], threshold: float
) -> list[int] | None:
    """Greedy forward walk along goal-rooted distances.

    Always stepping to the smallest-coordinate neighbor that still lies on a
    shortest path yields the lexicographically smallest node sequence among
    all minimum-length paths.
    """
    start = grid._start
    goal = grid._goal
    if dist[start] is None:
        return None
    ny = grid.ny
    nbrs = grid._nbrs
    walk = [start]
    k = start
    a, b = dist[start]
    while k != goal:
        best = -1
        best_ij: tuple[int, int] | None = None
        for m, diag, gate in nbrs[k]:
            if gate < threshold:
                continue
            need = (a, b - 1) if diag else (a - 1, b)
            if need[1] < 0 or need[0] < 0:
                continue
            if dist[m] == need:
                ij = divmod(m, ny)
                if best_ij is None or ij < best_ij:
                    best = m
                    best_ij = ij
        assert best_ij is not None, "distance table inconsistent"
        k = best
        a, b = dist[k]  # type: ignore[misc]
        walk.append(k)
    return walk


def classical_shortest(grid: GridGraph) -> Path | None:
    """Minimum-length path over crossing-free edges and free endpoints.

    Returns None when the free space does not connect start to goal. Among
    equal-length optima the lexicographically smallest node sequence wins.
    """
    scenario = grid.scenario
    if not is_free(grid.node_position(grid.start_node), scenario):
        return None
    if not is_free(grid.node_position(grid.goal_node), scenario):
        return None
    dist = _dijkstra_to_goal(grid, _CLASSICAL_THRESHOLD)
    walk = _lex_walk(grid, dist, _CLASSICAL_THRESHOLD)
    if walk is None:
        return None
    return grid._walk_to_path(walk)


def _walk_plausibility(grid: GridGraph, walk: list[int]) -> float:
    penetrated: set[str] = set()
    crossed = grid._edge_crossed
    for k, m in zip(walk, walk[1:]):
        penetrated |= crossed[(k, m) if k < m else (m, k)]
    if not penetrated:
        return 1.0
    eff = grid.effective
    return min(eff[oid] for oid in penetrated)


def pareto_search(grid: GridGraph) -> list[tuple[Path, PathEvaluation]]:
    """The full Pareto front of (length, plausibility), one path per point.

    Candidate plausibility levels are the distinct positive effective
    degrees plus 1.0; for each, the shortest path penetrating nothing rated
    below it is found, and the non-dominated results form the front. Routes
    with plausibility 0 never qualify. Sorted by decreasing plausibility;
    empty when no positively-plausible route exists.
    """
    eff = grid.effective
    levels = sorted({d for d in eff.values() if d > 0.0} | {1.0}, reverse=True)

    # level -> (straight, diagonal, actual bottleneck, node walk)
    results: dict[float, tuple[int, int, float, list[int]]] = {}
    for level in levels:
        dist = _dijkstra_to_goal(grid, level)
        walk = _lex_walk(grid, dist, level)
        if walk is None:
            continue
        a, b = dist[grid._start]  # type: ignore[misc]
        results[level] = (a, b, _walk_plausibility(grid, walk), walk)

    entries = list(results.values())
    front_lams: list[float] = []
    for a1, b1, lam1, _ in entries:
        dominated = False
        for a2, b2, lam2, _ in entries:
            shorter = _len_less(a2, b2, a1, b1)
            le = shorter or (a2 == a1 and b2 == b1)
            if le and lam2 >= lam1 and (shorter or lam2 > lam1):
                dominated = True
                break
        if not dominated and lam1 not in front_lams:
            front_lams.append(lam1)

    front: list[tuple[Path, PathEvaluation]] = []
    for lam in sorted(front_lams, reverse=True):
        # The level equal to the point's own plausibility holds its canonical
        # (min length, then lexicographic) representative.
        a, b, actual, walk = results[lam]
        assert actual == lam, "front bookkeeping out of sync"
        path = grid._walk_to_path(walk)
        front.append((path, evaluate_path(path, grid.scenario)))

    assert len(front) <= len(set(eff.values())) + 1, "front larger than level count"
    return front


def enumerate_paths_oracle(
    grid: GridGraph, node_budget: int
) -> list[tuple[Path, PathEvaluation]]:
    """Brute-force ground truth for pareto_search on tiny grids.

    Enumerates every simple start-to-goal path depth-first, evaluates each
    with evaluate_path, drops zero-plausibility routes and filters by direct
    pairwise dominance. Raises ValueError when the grid exceeds the budget.
    """
    n = grid.node_count
    if n > node_budget:
        raise ValueError(f"grid has {n} nodes, exceeding the budget of {node_budget}")

    ny = grid.ny
    # Sorted adjacency makes the enumeration order deterministic.
    adj: list[list[int]] = [
        [m for m, _, _ in sorted(lst, key=lambda t: divmod(t[0], ny))]
        for lst in grid._nbrs
    ]
    positions = [grid.node_position(divmod(k, ny)) for k in range(n)]
    scenario = grid.scenario
    start = grid._start
    goal = grid._goal

    # Distinct (length, plausibility) points with their best representative;
    # collapsing first keeps the pairwise dominance pass small even when the
    # enumeration yields tens of thousands of paths.
    points: dict[tuple[float, float], tuple[tuple, Path, PathEvaluation]] = {}

    def record(walk: list[int]) -> None:
        path = Path(tuple(positions[q] for q in walk))
        ev = evaluate_path(path, scenario)
        if ev.plausibility <= 0.0:
            return
        key = (ev.length, ev.plausibility)
        lex = tuple((w.x, w.y) for w in path.waypoints)
        known = points.get(key)
        if known is None or lex < known[0]:
            points[key] = (lex, path, ev)

    stack_path = [start]
    visited = {start}

    def dfs(k: int) -> None:
        if k == goal:
            record(stack_path)
            return
        for m in adj[k]:
            if m not in visited:
                visited.add(m)
                stack_path.append(m)
                dfs(m)
                stack_path.pop()
                visited.remove(m)

    dfs(start)

    entries = list(points.values())
    non_dominated = [
        (lex, p, e)
        for lex, p, e in entries
        if not any(dominates(e2, e) for _, _, e2 in entries if e2 is not e)
    ]
    non_dominated.sort(key=lambda t: (-t[2].plausibility, t[2].length, t[0]))

    front: list[tuple[Path, PathEvaluation]] = []
    for _, p, e in non_dominated:
        if front:
            prev = front[-1][1]
            if prev.plausibility == e.plausibility and lengths_close(
                prev.length, e.length
            ):
                continue  # same Pareto point up to float noise; keep the first
        front.append((p, e))
    return front

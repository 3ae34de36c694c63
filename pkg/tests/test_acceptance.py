"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import dataclasses
import json
import math
import random
import time

import pytest

import fuzzyplan as fp
from fuzzyplan.cli import main
from fuzzyplan.evaluation import endpoints, evaluate_path
from fuzzyplan.planner import draw_indices
from fuzzyplan.svg import render_svg

from conftest import (
    GOLDEN_DIR,
    SCENARIO_DIR,
    fronts_equal,
    make_rated_instance,
)

FIGURE1 = str(SCENARIO_DIR / "figure1.json")

N_ORACLE_INSTANCES = 500
N_SEMANTICS_INSTANCES = 100
LENGTH_REL_TOL = 1e-9


def verdict(num: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" [{extra}]" if extra else ""
    print(f"criterion {num} ({name}): {status}{suffix}")
    assert ok, f"criterion {num} ({name}) failed"


@pytest.fixture(scope="module")
def oracle_instances():
    rng = random.Random(424242)
    instances = [make_rated_instance(rng) for _ in range(N_ORACLE_INSTANCES - 2)]
    # Two grids right at the 16-node budget edge.
    instances.append(make_rated_instance(rng, size=(2, 8)))
    instances.append(make_rated_instance(rng, size=(4, 4)))
    return instances


def test_criterion_1_oracle_equivalence(oracle_instances):
    started = time.perf_counter()
    mismatches = 0
    for s in oracle_instances:
        grid = fp.build_grid(s, 1.0)
        assert grid.node_count <= 16
        oracle = fp.enumerate_paths_oracle(grid, 16)
        front = fp.pareto_search(grid)
        if not fronts_equal(oracle, front, rel=LENGTH_REL_TOL):
            mismatches += 1
    elapsed = time.perf_counter() - started
    ok = mismatches == 0 and elapsed < 60.0
    verdict(
        1,
        "oracle equivalence",
        ok,
        f"{len(oracle_instances)} instances, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_2_section_law(oracle_instances):
    violations = 0
    plans = 0
    for s in oracle_instances:
        try:
            plan = fp.plan_fuzzy(s, 1.0, fp.SelectionRule.lex())
        except fp.NoPlausiblePathError:
            continue
        plans += 1
        for path, _ in plan.candidates:
            if endpoints(path) != (s.start, s.goal):
                violations += 1
    verdict(2, "section law", violations == 0, f"{plans} plans, {violations} violations")


def test_criterion_3_degree_one_semantics():
    rng = random.Random(31337)
    sizes = [(4, 4), (5, 5), (6, 6), (4, 7), (8, 4), (6, 3)]
    failures = 0
    for _ in range(N_SEMANTICS_INSTANCES):
        s = make_rated_instance(rng, size=rng.choice(sizes), degrees=(1.0,))
        front = fp.pareto_search(fp.build_grid(s, 1.0))
        empty = dataclasses.replace(s, obstacles=())
        baseline = fp.classical_shortest(fp.build_grid(empty, 1.0))
        base_len = evaluate_path(baseline, empty).length
        ok = (
            len(front) == 1
            and front[0][1].plausibility == 1.0
            and math.isclose(front[0][1].length, base_len, rel_tol=LENGTH_REL_TOL)
        )
        if not ok:
            failures += 1
    verdict(
        3,
        "degree-1 semantics",
        failures == 0,
        f"{N_SEMANTICS_INSTANCES} instances, {failures} failures",
    )


def test_criterion_4_degree_zero_semantics():
    rng = random.Random(24601)
    sizes = [(4, 4), (5, 5), (6, 6), (4, 7), (8, 4), (6, 3)]
    failures = 0
    for _ in range(N_SEMANTICS_INSTANCES):
        s = make_rated_instance(rng, size=rng.choice(sizes), degrees=(0.0,))
        grid = fp.build_grid(s, 1.0)
        classical = fp.classical_shortest(grid)
        try:
            plan = fp.plan_fuzzy(s, 1.0, fp.SelectionRule.lex())
        except fp.NoPlausiblePathError:
            plan = None
        if classical is None or plan is None:
            ok = classical is None and plan is None
        else:
            ok = plan.chosen_path.waypoints == classical.waypoints
        if not ok:
            failures += 1
    verdict(
        4,
        "degree-0 semantics",
        failures == 0,
        f"{N_SEMANTICS_INSTANCES} instances, {failures} failures",
    )


def test_criterion_5_figure1_reproduction(figure1, capsys, tmp_path):
    plan = fp.plan_fuzzy(figure1, 1.0, fp.SelectionRule.lex())
    lengths = [ev.length for _, ev in plan.candidates]
    shortest_idx = lengths.index(min(lengths))
    straight_ev = plan.candidates[shortest_idx][1]
    avoiding = [
        ev for _, ev in plan.candidates if ev.plausibility == 1.0
    ]
    structure_ok = (
        plan.n >= 2
        and len(straight_ev.penetrated) == 3
        and len(avoiding) == 1
        and avoiding[0].length > straight_ev.length
    )

    # Byte-stable golden SVG, reproduced through the CLI pipeline.
    rc = main(["plan", FIGURE1, "--resolution", "1"])
    out = capsys.readouterr().out
    result_file = tmp_path / "figure1_result.json"
    result_file.write_text(out)
    svg_file = tmp_path / "figure1.svg"
    rc2 = main(["render", FIGURE1, str(result_file), "--out", str(svg_file)])
    capsys.readouterr()
    golden = (GOLDEN_DIR / "figure1.svg").read_bytes()
    golden_ok = rc == 0 and rc2 == 0 and svg_file.read_bytes() == golden

    direct = render_svg(figure1, [p for p, _ in plan.candidates], plan.chosen)
    golden_ok = golden_ok and direct.encode() == golden

    verdict(5, "figure-1 reproduction", structure_ok and golden_ok)


def test_criterion_6_soft_robot_monotonicity():
    rng = random.Random(60321)
    failures = 0
    for _ in range(1000):
        lam = rng.uniform(1e-4, 1 - 1e-4)
        phi1 = rng.uniform(0, 10)
        phi2 = phi1 + rng.uniform(0.01, 5)
        o = fp.Obstacle("o", fp.Circle(0, 0, 1), lam)
        e1 = fp.effective_degree(o, fp.RobotProfile(0, phi1))
        e2 = fp.effective_degree(o, fp.RobotProfile(0, phi2))
        if not e1 < e2:  # strict inside (0, 1)
            failures += 1
    for fixed in (0.0, 1.0):
        o = fp.Obstacle("o", fp.Circle(0, 0, 1), fixed)
        e1 = fp.effective_degree(o, fp.RobotProfile(0, 0.5))
        e2 = fp.effective_degree(o, fp.RobotProfile(0, 7.0))
        if not (e1 == e2 == fixed):
            failures += 1
    verdict(6, "soft-robot monotonicity", failures == 0, f"{failures} failures")


def test_criterion_7_random_policy_statistics():
    rng = random.Random(777)
    weight_failures = 0
    for _ in range(30):
        s = make_rated_instance(rng)
        try:
            plan = fp.plan_fuzzy(s, 1.0, fp.SelectionRule.lex())
        except fp.NoPlausiblePathError:
            continue
        for weighting in ("uniform", "plausibility"):
            policy = fp.make_random_policy(plan, weighting)
            if abs(sum(policy.weights) - 1.0) > 1e-12:
                weight_failures += 1
            if any(w < 0 for w in policy.weights):
                weight_failures += 1

    policy = fp.RandomPolicy((1 / 3, 2 / 3))
    draws = draw_indices(policy, 20250808, 10_000)
    freq = sum(draws) / len(draws)
    band_ok = 0.6467 <= freq <= 0.6867
    verdict(
        7,
        "random-policy statistics",
        weight_failures == 0 and band_ok,
        f"freq={freq:.4f}",
    )


def test_criterion_8_cli_determinism(capsys, tmp_path):
    wall_doc = {
        "bounds": {"xmin": 0, "ymin": 0, "xmax": 3, "ymax": 2},
        "obstacles": [
            {"id": "wall",
             "shape": {"kind": "rect", "xmin": 0.9, "ymin": 0.5, "xmax": 2.1,
                       "ymax": 2.5},
             "degree": 0.5}
        ],
        "start": {"x": 0, "y": 1},
        "goal": {"x": 3, "y": 1},
    }
    small = tmp_path / "wall.json"
    small.write_text(json.dumps(wall_doc))

    stdout_commands = [
        ["plan", FIGURE1, "--resolution", "1"],
        ["plan", FIGURE1, "--resolution", "1", "--mode", "classical"],
        ["plan", FIGURE1, "--resolution", "1", "--rule", "threshold=0.4"],
        ["oracle", str(small), "--resolution", "1"],
        ["sample", FIGURE1, "--resolution", "1", "--weighting", "plausibility",
         "--seed", "11", "--draws", "250"],
    ]
    ok = True
    for argv in stdout_commands:
        rc1 = main(list(argv))
        out1 = capsys.readouterr().out
        rc2 = main(list(argv))
        out2 = capsys.readouterr().out
        ok = ok and rc1 == rc2 == 0 and out1 == out2

    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    ok = ok and main(["render", FIGURE1, "--out", str(a)]) == 0
    ok = ok and main(["render", FIGURE1, "--out", str(b)]) == 0
    capsys.readouterr()
    ok = ok and a.read_bytes() == b.read_bytes()
    verdict(8, "CLI determinism", ok)


def test_criterion_9_performance_envelope():
    rng = random.Random(7)
    obstacles = []
    degrees = (0.0, 0.25, 0.5, 0.75, 1.0)
    for i in range(20):
        if rng.random() < 0.5:
            x1 = rng.uniform(0, 90)
            y1 = rng.uniform(0, 90)
            shape = fp.Rect(x1, y1, x1 + rng.uniform(3, 12), y1 + rng.uniform(3, 12))
        else:
            shape = fp.Circle(
                rng.uniform(5, 95), rng.uniform(5, 95), rng.uniform(2, 7)
            )
        obstacles.append(fp.Obstacle(f"o{i}", shape, rng.choice(degrees)))
    s = fp.Scenario(
        bounds=fp.Rect(0, 0, 100, 100),
        obstacles=tuple(obstacles),
        start=fp.Configuration(0, 0),
        goal=fp.Configuration(100, 100),
        profile=fp.RobotProfile(0.5, 1.0),
    )
    started = time.perf_counter()
    plan = fp.plan_fuzzy(s, 1.0, fp.SelectionRule.lex())
    elapsed = time.perf_counter() - started

    grid = fp.build_grid(s, 1.0)
    bound = len(set(grid.effective.values())) + 1
    ok = elapsed < 5.0 and plan.n <= bound
    verdict(
        9,
        "performance envelope",
        ok,
        f"{grid.node_count} nodes, {elapsed:.2f}s, front {plan.n} <= {bound}",
    )

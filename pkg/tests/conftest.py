import random
from pathlib import Path

import pytest

import fuzzyplan as fp
from fuzzyplan.documents import parse_scenario

ROOT = Path(__file__).resolve().parents[1]
SCENARIO_DIR = ROOT / "scenarios"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

RATED_DEGREES = (0.0, 0.25, 0.5, 0.75, 1.0)

# Grid sizes (node counts per axis) grouped by enumeration cost; the king
# graph on 4x4 already has ~1e5 simple corner-to-corner paths.
SIZES_SMALL = ((2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (2, 5), (5, 2))
SIZES_MID = ((3, 4), (4, 3), (2, 6), (6, 2))
SIZES_LARGE = ((2, 7), (7, 2))
SIZES_XL = ((2, 8), (4, 4))


def make_rated_instance(
    rng: random.Random,
    size: tuple[int, int] | None = None,
    lattice_endpoints: bool = True,
    vary_profile: bool = True,
    degrees=RATED_DEGREES,
) -> fp.Scenario:
    """A random small scenario on a unit lattice with rated obstacles."""
    if size is None:
        roll = rng.random()
        if roll < 0.84:
            size = rng.choice(SIZES_SMALL)
        elif roll < 0.96:
            size = rng.choice(SIZES_MID)
        else:
            size = rng.choice(SIZES_LARGE)
    nx, ny = size
    w, h = nx - 1.0, ny - 1.0
    obstacles = []
    for i in range(rng.randint(1, 3)):
        if rng.random() < 0.5:
            x1, x2 = sorted((rng.uniform(-0.5, w + 0.5), rng.uniform(-0.5, w + 0.5)))
            y1, y2 = sorted((rng.uniform(-0.5, h + 0.5), rng.uniform(-0.5, h + 0.5)))
            shape = fp.Rect(x1, y1, x2 + 0.15, y2 + 0.15)
        else:
            shape = fp.Circle(
                rng.uniform(-0.5, w + 0.5),
                rng.uniform(-0.5, h + 0.5),
                rng.uniform(0.3, 1.2),
            )
        obstacles.append(fp.Obstacle(f"o{i}", shape, rng.choice(degrees)))
    nodes = [(i, j) for i in range(nx) for j in range(ny)]
    a, b = rng.sample(nodes, 2)
    if lattice_endpoints:
        start = fp.Configuration(float(a[0]), float(a[1]))
        goal = fp.Configuration(float(b[0]), float(b[1]))
    else:
        start = fp.Configuration(rng.uniform(0, w), rng.uniform(0, h))
        goal = fp.Configuration(rng.uniform(0, w), rng.uniform(0, h))
        if start == goal:
            goal = fp.Configuration(float(b[0]), float(b[1]))
    profile = fp.RobotProfile(
        radius=rng.choice((0.0, 0.0, 0.2)) if vary_profile else 0.0,
        softness=rng.choice((0.0, 0.0, 1.0, 3.0)) if vary_profile else 0.0,
    )
    return fp.Scenario(fp.Rect(0.0, 0.0, w, h), tuple(obstacles), start, goal, profile)


def front_points(front):
    return [(ev.plausibility, ev.length) for _, ev in front]


def fronts_equal(a, b, rel=1e-9):
    pa, pb = front_points(a), front_points(b)
    if len(pa) != len(pb):
        return False
    return all(
        la == lb and abs(xa - xb) <= rel * max(abs(xa), abs(xb))
        for (la, xa), (lb, xb) in zip(pa, pb)
    )


@pytest.fixture(scope="session")
def figure1() -> fp.Scenario:
    return parse_scenario((SCENARIO_DIR / "figure1.json").read_text())


@pytest.fixture(scope="session")
def open_field() -> fp.Scenario:
    return parse_scenario((SCENARIO_DIR / "open.json").read_text())


@pytest.fixture(scope="session")
def blocked() -> fp.Scenario:
    return parse_scenario((SCENARIO_DIR / "blocked.json").read_text())


@pytest.fixture(scope="session")
def instance_factory():
    return make_rated_instance

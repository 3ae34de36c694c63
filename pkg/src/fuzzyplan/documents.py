"""Scenario and result documents: strict JSON in, deterministic JSON out.

Parsing is strict: unknown fields, wrong types and malformed shapes are
rejected with the JSON path of the offending element, so a typo in a
hand-written scenario points at itself. Rendering a scenario emits exact
float representations (the parse/render round trip is the identity);
result documents round numbers to 12 significant digits.
"""

from __future__ import annotations

import json
from typing import Any

from .evaluation import Path, PathEvaluation
from .world import Circle, Configuration, Obstacle, Rect, RobotProfile, Scenario


class DocumentError(ValueError):
    """Malformed document; the message carries the offending JSON path."""


def _fail(path: str, message: str) -> None:
    raise DocumentError(f"{path}: {message}")


def _require_object(value: Any, path: str, required: tuple, optional: tuple = ()):
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    allowed = set(required) | set(optional)
    for key in value:
        if key not in allowed:
            _fail(f"{path}.{key}", "unknown field")
    for key in required:
        if key not in value:
            _fail(path, f"missing required field {key!r}")
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected a number, got {type(value).__name__}")
    return float(value)


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        _fail(path, f"expected a string, got {type(value).__name__}")
    return value


def _point(value: Any, path: str) -> Configuration:
    obj = _require_object(value, path, ("x", "y"))
    return Configuration(_number(obj["x"], f"{path}.x"), _number(obj["y"], f"{path}.y"))


def _shape(value: Any, path: str):
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    kind = value.get("kind")
    if kind == "rect":
        obj = _require_object(value, path, ("kind", "xmin", "ymin", "xmax", "ymax"))
        return Rect(
            _number(obj["xmin"], f"{path}.xmin"),
            _number(obj["ymin"], f"{path}.ymin"),
            _number(obj["xmax"], f"{path}.xmax"),
            _number(obj["ymax"], f"{path}.ymax"),
        )
    if kind == "circle":
        obj = _require_object(value, path, ("kind", "cx", "cy", "radius"))
        return Circle(
            _number(obj["cx"], f"{path}.cx"),
            _number(obj["cy"], f"{path}.cy"),
            _number(obj["radius"], f"{path}.radius"),
        )
    _fail(f"{path}.kind", f"expected \"rect\" or \"circle\", got {kind!r}")


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario document; raises DocumentError with a field path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc

    top = _require_object(
        data, "$", ("bounds", "obstacles", "start", "goal"), optional=("profile",)
    )

    b = _require_object(top["bounds"], "$.bounds", ("xmin", "ymin", "xmax", "ymax"))
    bounds = Rect(
        _number(b["xmin"], "$.bounds.xmin"),
        _number(b["ymin"], "$.bounds.ymin"),
        _number(b["xmax"], "$.bounds.xmax"),
        _number(b["ymax"], "$.bounds.ymax"),
    )

    if not isinstance(top["obstacles"], list):
        _fail("$.obstacles", "expected an array")
    obstacles = []
    for i, entry in enumerate(top["obstacles"]):
        path = f"$.obstacles[{i}]"
        obj = _require_object(entry, path, ("id", "shape", "degree"))
        obstacles.append(
            Obstacle(
                _string(obj["id"], f"{path}.id"),
                _shape(obj["shape"], f"{path}.shape"),
                _number(obj["degree"], f"{path}.degree"),
            )
        )

    if "profile" in top:
        p = _require_object(top["profile"], "$.profile", ("radius", "softness"))
        profile = RobotProfile(
            _number(p["radius"], "$.profile.radius"),
            _number(p["softness"], "$.profile.softness"),
        )
    else:
        profile = RobotProfile()

    return Scenario(
        bounds=bounds,
        obstacles=tuple(obstacles),
        start=_point(top["start"], "$.start"),
        goal=_point(top["goal"], "$.goal"),
        profile=profile,
    )


def _shape_payload(shape) -> dict:
    if isinstance(shape, Rect):
        return {
            "kind": "rect",
            "xmin": shape.xmin,
            "ymin": shape.ymin,
            "xmax": shape.xmax,
            "ymax": shape.ymax,
        }
    return {"kind": "circle", "cx": shape.cx, "cy": shape.cy, "radius": shape.radius}


def render_scenario(s: Scenario) -> str:
    """Serialize a scenario exactly; parse(render(s)) == s."""
    doc = {
        "bounds": {
            "xmin": s.bounds.xmin,
            "ymin": s.bounds.ymin,
            "xmax": s.bounds.xmax,
            "ymax": s.bounds.ymax,
        },
        "obstacles": [
            {"id": o.id, "shape": _shape_payload(o.shape), "degree": o.degree}
            for o in s.obstacles
        ],
        "start": {"x": s.start.x, "y": s.start.y},
        "goal": {"x": s.goal.x, "y": s.goal.y},
        "profile": {"radius": s.profile.radius, "softness": s.profile.softness},
    }
    return json.dumps(doc, indent=2) + "\n"


# -- result documents --------------------------------------------------------


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _rounded(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return _round12(value)
    if isinstance(value, list):
        return [_rounded(v) for v in value]
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}
    return value


def format_document(doc: dict) -> str:
    """Deterministic JSON text with numbers at 12 significant digits."""
    return json.dumps(_rounded(doc), indent=2) + "\n"


def candidate_payload(path: Path, ev: PathEvaluation) -> dict:
    return {
        "lambda": ev.plausibility,
        "length": ev.length,
        "penetrated": sorted(ev.penetrated),
        "waypoints": [[w.x, w.y] for w in path.waypoints],
    }


def plan_document(
    mode: str,
    resolution: float,
    rule: str,
    candidates: list[tuple[Path, PathEvaluation]],
    chosen: int,
) -> dict:
    return {
        "mode": mode,
        "resolution": resolution,
        "rule": rule,
        "n": len(candidates),
        "chosen": chosen,
        "candidates": [candidate_payload(p, e) for p, e in candidates],
    }


def parse_result_paths(text: str) -> tuple[list[Path], int | None]:
    """Extract candidate paths and the chosen index from a result document.

    Accepts any document shaped like plan_document output; only the fields
    needed for rendering are interpreted.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict) or "candidates" not in data:
        raise DocumentError("$: expected a result object with a candidates array")
    raw = data["candidates"]
    if not isinstance(raw, list):
        raise DocumentError("$.candidates: expected an array")
    paths = []
    for i, entry in enumerate(raw):
        where = f"$.candidates[{i}]"
        if not isinstance(entry, dict) or "waypoints" not in entry:
            raise DocumentError(f"{where}: expected an object with waypoints")
        wps = entry["waypoints"]
        if not isinstance(wps, list) or len(wps) < 2:
            raise DocumentError(f"{where}.waypoints: expected at least two points")
        points = []
        for j, pt in enumerate(wps):
            if (
                not isinstance(pt, list)
                or len(pt) != 2
                or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in pt)
            ):
                raise DocumentError(f"{where}.waypoints[{j}]: expected [x, y]")
            points.append(Configuration(float(pt[0]), float(pt[1])))
        try:
            paths.append(Path(tuple(points)))
        except ValueError as exc:
            raise DocumentError(f"{where}.waypoints: {exc}") from exc
    chosen = data.get("chosen")
    if chosen is not None and (
        isinstance(chosen, bool)
        or not isinstance(chosen, int)
        or not 0 <= chosen < len(paths)
    ):
        raise DocumentError("$.chosen: expected an index into candidates")
    return paths, chosen

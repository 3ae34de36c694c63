"""Command line interface.

Subcommands: plan, render, oracle, sample, report. Results go to stdout as
JSON documents; files (SVG, report artifacts) are written atomically.

Exit codes are a stable contract:
  0  success
  1  input error (unreadable/malformed/invalid scenario, bad flags, budget)
  2  no path (classical) / no plausible path (fuzzy)
  3  oracle mismatch
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import documents
from .evaluation import evaluate_path
from .planner import (
    NoPlausiblePathError,
    SelectionRule,
    draw_indices,
    make_random_policy,
    plan_fuzzy,
)
from .search import (
    build_grid,
    classical_shortest,
    enumerate_paths_oracle,
    lengths_close,
    pareto_search,
)
from .svg import render_svg
from .world import Scenario, validate_scenario

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_PATH = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    # Flag misuse is an input error: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _InputError(message)


class _InputError(Exception):
    pass


def _parse_rule(text: str) -> SelectionRule:
    if text == "lex":
        return SelectionRule.lex()
    for prefix, factory in (
        ("threshold=", SelectionRule.threshold),
        ("weighted=", SelectionRule.weighted),
    ):
        if text.startswith(prefix):
            try:
                return factory(float(text[len(prefix):]))
            except ValueError as exc:
                raise _InputError(f"bad --rule value {text!r}: {exc}") from exc
    raise _InputError(
        f"bad --rule {text!r}: expected lex, threshold=<value> or weighted=<value>"
    )


def _load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    try:
        scenario = documents.parse_scenario(text)
    except documents.DocumentError as exc:
        raise _InputError(f"{path}: {exc}") from exc
    report = validate_scenario(scenario)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not report.ok:
        lines = "\n".join(f"  {v}" for v in report.violations)
        raise _InputError(f"{path}: invalid scenario:\n{lines}")
    return scenario


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)  # mkstemp defaults to 0600
        os.replace(tmp, path)
    except OSError as exc:
        raise _InputError(f"cannot write {path}: {exc}") from exc


def _cmd_plan(args) -> int:
    scenario = _load_scenario(args.scenario)
    if args.mode == "classical":
        grid = build_grid(scenario, args.resolution)
        path = classical_shortest(grid)
        if path is None:
            print("NoPath", file=sys.stderr)
            return EXIT_NO_PATH
        ev = evaluate_path(path, scenario)
        doc = documents.plan_document(
            "classical", args.resolution, "classical", [(path, ev)], 0
        )
    else:
        rule = _parse_rule(args.rule)
        try:
            plan = plan_fuzzy(scenario, args.resolution, rule)
        except NoPlausiblePathError:
            print("NoPlausiblePath", file=sys.stderr)
            return EXIT_NO_PATH
        doc = documents.plan_document(
            "fuzzy", args.resolution, rule.describe(), list(plan.candidates),
            plan.chosen,
        )
    sys.stdout.write(documents.format_document(doc))
    return EXIT_OK


def _cmd_render(args) -> int:
    scenario = _load_scenario(args.scenario)
    candidates = None
    chosen = None
    if args.result:
        try:
            with open(args.result, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _InputError(f"cannot read {args.result}: {exc}") from exc
        try:
            candidates, chosen = documents.parse_result_paths(text)
        except documents.DocumentError as exc:
            raise _InputError(f"{args.result}: {exc}") from exc
    _write_atomic(args.out, render_svg(scenario, candidates, chosen))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    scenario = _load_scenario(args.scenario)
    grid = build_grid(scenario, args.resolution)
    try:
        oracle_front = enumerate_paths_oracle(grid, args.budget)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    search_front = pareto_search(grid)

    match = len(oracle_front) == len(search_front) and all(
        o_ev.plausibility == s_ev.plausibility
        and lengths_close(o_ev.length, s_ev.length)
        for (_, o_ev), (_, s_ev) in zip(oracle_front, search_front)
    )
    verdict = "MATCH" if match else "MISMATCH"
    doc = {
        "resolution": args.resolution,
        "budget": args.budget,
        "verdict": verdict,
        "search_front": [
            documents.candidate_payload(p, e) for p, e in search_front
        ],
        "oracle_front": [
            documents.candidate_payload(p, e) for p, e in oracle_front
        ],
    }
    sys.stdout.write(documents.format_document(doc))
    print(verdict)
    return EXIT_OK if match else EXIT_MISMATCH


def _cmd_sample(args) -> int:
    if args.draws < 1:
        raise _InputError("--draws must be at least 1")
    scenario = _load_scenario(args.scenario)
    try:
        plan = plan_fuzzy(scenario, args.resolution, SelectionRule.lex())
    except NoPlausiblePathError:
        print("NoPlausiblePath", file=sys.stderr)
        return EXIT_NO_PATH
    policy = make_random_policy(plan, args.weighting)
    draws = draw_indices(policy, args.seed, args.draws)
    histogram = {str(i): 0 for i in range(plan.n)}
    for d in draws:
        histogram[str(d)] += 1
    doc = documents.plan_document(
        "sample", args.resolution, "lex", list(plan.candidates), plan.chosen
    )
    doc.update(
        {
            "weighting": args.weighting,
            "weights": list(policy.weights),
            "seed": args.seed,
            "draws": args.draws,
            "draw": draws[0],
            "histogram": histogram,
            "frequencies": [histogram[str(i)] / args.draws for i in range(plan.n)],
        }
    )
    sys.stdout.write(documents.format_document(doc))
    return EXIT_OK


def _cmd_report(args) -> int:
    from . import report  # matplotlib import deferred until needed

    scenario = _load_scenario(args.scenario)
    rule = _parse_rule(args.rule)
    try:
        plan = plan_fuzzy(scenario, args.resolution, rule)
    except NoPlausiblePathError:
        print("NoPlausiblePath", file=sys.stderr)
        return EXIT_NO_PATH
    written = report.write_report(scenario, plan, args.out_dir)
    for path in written:
        print(path)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fuzzyplan",
        description="Plan 2D paths that may cross obstacles, by traversal degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="plan and print the result document")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--resolution", type=float, required=True)
    p.add_argument("--rule", default="lex",
                   help="lex | threshold=<lambda_min> | weighted=<w>")
    p.add_argument("--mode", choices=("fuzzy", "classical"), default="fuzzy")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("render", help="render scenario (and result) to SVG")
    p.add_argument("scenario")
    p.add_argument("result", nargs="?", default=None,
                   help="result document from the plan command")
    p.add_argument("--out", required=True, help="output SVG file")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("oracle", help="compare the search against brute force")
    p.add_argument("scenario")
    p.add_argument("--resolution", type=float, required=True)
    p.add_argument("--budget", type=int, default=16,
                   help="max grid nodes for enumeration")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sample", help="draw candidates from a random policy")
    p.add_argument("scenario")
    p.add_argument("--resolution", type=float, required=True)
    p.add_argument("--weighting", choices=("uniform", "plausibility"),
                   default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--draws", type=int, default=1)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("report", help="write figures and CSV for a plan")
    p.add_argument("scenario")
    p.add_argument("--resolution", type=float, required=True)
    p.add_argument("--rule", default="lex")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

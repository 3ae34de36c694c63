"""Human-oriented report: matplotlib figures plus a CSV of the candidate set.

Written next to each other in an output directory:

  candidates.csv    one row per candidate (index, plausibility, length,
                    penetrated obstacle ids, chosen flag)
  workspace.png     the scenario with every candidate drawn, chosen on top
  pareto_front.png  the length/plausibility trade-off curve

The SVG renderer (svg module) remains the byte-stable machine surface; these
figures are for eyeballs.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle as MplCircle
from matplotlib.patches import Rectangle as MplRectangle

from .planner import FuzzyPlan
from .world import Circle, Rect, Scenario


def write_candidates_csv(plan: FuzzyPlan, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["index", "plausibility", "length", "penetrated", "chosen"]
        )
        for i, (_, ev) in enumerate(plan.candidates):
            writer.writerow(
                [
                    i,
                    f"{ev.plausibility:.12g}",
                    f"{ev.length:.12g}",
                    ";".join(sorted(ev.penetrated)),
                    int(i == plan.chosen),
                ]
            )


def _draw_workspace(ax, scenario: Scenario, plan: FuzzyPlan) -> None:
    b = scenario.bounds
    ax.add_patch(
        MplRectangle(
            (b.xmin, b.ymin),
            b.xmax - b.xmin,
            b.ymax - b.ymin,
            fill=False,
            edgecolor="0.2",
            linewidth=1.2,
        )
    )
    for o in scenario.obstacles:
        gray = str(min(max(o.degree, 0.0), 1.0))
        if isinstance(o.shape, Rect):
            s = o.shape
            patch = MplRectangle(
                (s.xmin, s.ymin),
                s.xmax - s.xmin,
                s.ymax - s.ymin,
                facecolor=gray,
                edgecolor="0.3",
            )
        else:
            c: Circle = o.shape
            patch = MplCircle((c.cx, c.cy), c.radius, facecolor=gray, edgecolor="0.3")
        ax.add_patch(patch)

    for i, (path, ev) in enumerate(plan.candidates):
        xs = [w.x for w in path.waypoints]
        ys = [w.y for w in path.waypoints]
        if i == plan.chosen:
            ax.plot(xs, ys, color="#c1292e", linewidth=2.2, zorder=5,
                    label=f"chosen (lam={ev.plausibility:.3g})")
        else:
            ax.plot(xs, ys, color="#33658a", linewidth=1.2, linestyle="--",
                    label=f"candidate {i} (lam={ev.plausibility:.3g})")

    ax.annotate("A", (scenario.start.x, scenario.start.y),
                textcoords="offset points", xytext=(6, 6))
    ax.annotate("B", (scenario.goal.x, scenario.goal.y),
                textcoords="offset points", xytext=(6, 6))
    ax.plot([scenario.start.x], [scenario.start.y], "ko", markersize=5)
    ax.plot([scenario.goal.x], [scenario.goal.y], "ko", markersize=5)
    ax.set_xlim(b.xmin - 1, b.xmax + 1)
    ax.set_ylim(b.ymin - 1, b.ymax + 1)
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title("workspace and candidate paths")


def _draw_front(ax, plan: FuzzyPlan) -> None:
    lengths = [ev.length for _, ev in plan.candidates]
    lams = [ev.plausibility for _, ev in plan.candidates]
    ax.plot(lengths, lams, "o-", color="#33658a")
    chosen_ev = plan.chosen_evaluation
    ax.plot([chosen_ev.length], [chosen_ev.plausibility], "s",
            color="#c1292e", markersize=10, fillstyle="none", label="chosen")
    for i, (l, lam) in enumerate(zip(lengths, lams)):
        ax.annotate(str(i), (l, lam), textcoords="offset points", xytext=(5, 5))
    ax.set_xlabel("length")
    ax.set_ylabel("plausibility")
    ax.set_ylim(-0.05, 1.05)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    ax.set_title("candidate trade-off")


def write_report(scenario: Scenario, plan: FuzzyPlan, out_dir: str) -> list[str]:
    """Write the CSV and both figures; returns the written file paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []

    csv_path = os.path.join(out_dir, "candidates.csv")
    write_candidates_csv(plan, csv_path)
    written.append(csv_path)

    fig, ax = plt.subplots(figsize=(8, 6))
    _draw_workspace(ax, scenario, plan)
    workspace_path = os.path.join(out_dir, "workspace.png")
    fig.savefig(workspace_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    written.append(workspace_path)

    fig, ax = plt.subplots(figsize=(6, 4.5))
    _draw_front(ax, plan)
    front_path = os.path.join(out_dir, "pareto_front.png")
    fig.savefig(front_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    written.append(front_path)

    return written

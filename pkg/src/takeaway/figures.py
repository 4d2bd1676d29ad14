"""Figure rendering for instances and verification summaries.

Drawing convention follows the instance geometry: the special vertex at
the center, the even-edge vertices on a ring around it, the even edge as
a dashed enclosing circle and each 3-edge as a shaded lobe through the
center.  All output goes to files; nothing here opens a window.
"""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, Polygon

from .core import Position
from .structure import StructureReport, classify

_SUBCAT_COLORS = {"A": "#1f77b4", "B": "#2ca02c", "C": "#7f7f7f"}


def _layout(p: Position, report: StructureReport) -> dict[str, tuple[float, float]]:
    coords: dict[str, tuple[float, float]] = {}
    ring = sorted(report.cat_x_vertices) or sorted(set(p.vertices) - {report.special_vertex})
    for i, v in enumerate(ring):
        angle = 2 * math.pi * i / max(len(ring), 1) + math.pi / 2
        coords[v] = (math.cos(angle), math.sin(angle))
    if report.special_vertex is not None:
        coords[report.special_vertex] = (0.0, 0.0)
    # Anything else (mid-game leftovers) goes on an outer arc.
    leftovers = [v for v in p.vertices if v not in coords]
    for i, v in enumerate(leftovers):
        angle = 2 * math.pi * i / max(len(leftovers), 1)
        coords[v] = (1.6 * math.cos(angle), 1.6 * math.sin(angle))
    return coords


def render_position(p: Position, path: str,
                    report: StructureReport | None = None) -> None:
    """Draw one position to an image file."""
    if report is None:
        report = classify(p)
    coords = _layout(p, report)

    fig, ax = plt.subplots(figsize=(5, 5))
    ax.set_aspect("equal")
    ax.axis("off")

    for e in p.sorted_edges():
        pts = [coords[v] for v in sorted(e)]
        if report.cat_x_edge is not None and e == report.cat_x_edge:
            ax.add_patch(Circle((0, 0), 1.18, fill=False, linestyle="--",
                                edgecolor="#d62785", linewidth=2))
        elif len(pts) >= 3:
            ax.add_patch(Polygon(pts, closed=True, alpha=0.25,
                                 facecolor="#ff7f0e", edgecolor="#ff7f0e"))
        else:
            (x0, y0), (x1, y1) = pts
            ax.plot([x0, x1], [y0, y1], color="#ff7f0e", alpha=0.6, linewidth=3)

    for v in p.vertices:
        x, y = coords[v]
        if v == report.special_vertex:
            color = "#d62728"
        else:
            color = _SUBCAT_COLORS.get(report.subcategory.get(v, ""), "black")
        ax.plot([x], [y], "o", markersize=14, color=color)
        ax.annotate(v, (x, y), textcoords="offset points", xytext=(10, 10))

    ax.set_xlim(-1.9, 1.9)
    ax.set_ylim(-1.9, 1.9)
    ax.set_title(f"group {report.group.value}" if report.conforming
                 else "non-conforming instance")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def render_verification_summary(summary: dict[str, dict[str, int]], path: str) -> None:
    """Bar chart of match / mismatch / no-prediction counts per group bucket."""
    buckets = sorted(summary)
    kinds = ["match", "mismatch", "no_prediction"]
    colors = {"match": "#2ca02c", "mismatch": "#d62728", "no_prediction": "#7f7f7f"}

    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(buckets)), 4))
    xs = range(len(buckets))
    bottom = [0] * len(buckets)
    for kind in kinds:
        heights = [summary[b].get(kind, 0) for b in buckets]
        ax.bar(xs, heights, bottom=bottom, label=kind.replace("_", " "),
               color=colors[kind])
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xticks(list(xs))
    ax.set_xticklabels(buckets, rotation=30, ha="right")
    ax.set_ylabel("instances")
    ax.set_title("oracle vs closed-form verification")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

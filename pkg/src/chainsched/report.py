"""Figure rendering for experiment results.

Renders summary figures next to the CSV output.  PNG metadata is pinned so
repeated renders of the same result are byte-identical.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .experiments import ExperimentResult  # noqa: E402

_PNG_METADATA = {"Software": "chainsched"}


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=100, metadata=_PNG_METADATA)
    plt.close(fig)


def render_ratio_summary(result: ExperimentResult, path: Path) -> None:
    """Bar chart of mean Cmax/LB per algorithm with min/max whiskers."""
    names = sorted(result.ratio_summary)
    means = [result.ratio_summary[n].mean for n in names]
    lo = [m - result.ratio_summary[n].min for n, m in zip(names, means)]
    hi = [result.ratio_summary[n].max - m for n, m in zip(names, means)]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, means, yerr=[lo, hi], capsize=4, color="#4878a8")
    ax.axhline(1.0, color="grey", linestyle="--", linewidth=1)
    ax.set_ylabel("makespan / lower bound")
    ax.set_title("Mean Cmax/LB ratio per algorithm")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    _save(fig, path)


def render_makespan_by_instance(result: ExperimentResult, path: Path) -> None:
    """Per-instance makespan of each algorithm plus the lower bound."""
    seeds = sorted({r.seed for r in result.rows})
    fig, ax = plt.subplots(figsize=(7, 4))
    for name in sorted({r.algorithm for r in result.rows}):
        spans = {r.seed: r.makespan for r in result.rows
                 if r.algorithm == name}
        ax.plot(seeds, [spans[s] for s in seeds], marker="o",
                markersize=3, label=name)
    bounds = {r.seed: r.lower_bound for r in result.rows}
    ax.plot(seeds, [bounds[s] for s in seeds], color="black",
            linestyle="--", linewidth=1, label="lower bound")
    ax.set_xlabel("instance seed")
    ax.set_ylabel("makespan (slots)")
    ax.set_title("Makespan per instance")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    _save(fig, path)


def render_report(result: ExperimentResult, out_dir) -> list[Path]:
    """Render all figures into out_dir; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "ratio_summary.png", out / "makespan_by_instance.png"]
    render_ratio_summary(result, paths[0])
    render_makespan_by_instance(result, paths[1])
    return paths

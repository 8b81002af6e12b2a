"""Report figures: outcome histograms and gate-count bars, written to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cost import CostReport


def plot_distribution(
    dist: dict[str, float],
    path: str,
    counts: dict[str, int] | None = None,
    title: str | None = None,
) -> None:
    """Bar chart of outcome probabilities; sampled frequencies overlay as dots."""
    keys = sorted(dist)
    fig, ax = plt.subplots(figsize=(max(6.0, 0.45 * len(keys)), 4.0))
    ax.bar(keys, [dist[k] for k in keys], color="#4878cf", label="exact")
    if counts:
        shots = sum(counts.values())
        ax.plot(
            keys,
            [counts.get(k, 0) / shots for k in keys],
            "ko",
            markersize=4,
            label=f"sampled ({shots} shots)",
        )
        ax.legend()
    ax.set_xlabel("outcome")
    ax.set_ylabel("probability")
    if title:
        ax.set_title(title)
    ax.tick_params(axis="x", rotation=90)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_comparison(
    dist_a: dict[str, float],
    dist_b: dict[str, float],
    path: str,
    labels: tuple[str, str] = ("baseline", "candidate"),
    title: str | None = None,
) -> None:
    """Side-by-side probability bars for two distributions."""
    keys = sorted(set(dist_a) | set(dist_b))
    pos = range(len(keys))
    width = 0.4
    fig, ax = plt.subplots(figsize=(max(6.0, 0.6 * len(keys)), 4.0))
    ax.bar([p - width / 2 for p in pos], [dist_a.get(k, 0.0) for k in keys],
           width, color="#4878cf", label=labels[0])
    ax.bar([p + width / 2 for p in pos], [dist_b.get(k, 0.0) for k in keys],
           width, color="#ee854a", label=labels[1])
    ax.set_xticks(list(pos))
    ax.set_xticklabels(keys, rotation=90)
    ax.set_xlabel("outcome")
    ax.set_ylabel("probability")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_cost(rep: CostReport, path: str, title: str | None = None) -> None:
    """Per-kind gate-count bars with the totals in the corner."""
    kinds = sorted(rep.per_kind)
    fig, ax = plt.subplots(figsize=(max(5.0, 0.8 * len(kinds)), 4.0))
    ax.bar(kinds, [rep.per_kind[k] for k in kinds], color="#4878cf")
    ax.set_xlabel("gate kind")
    ax.set_ylabel("count")
    note = (
        f"total {rep.total}, depth {rep.depth}\n"
        f"native {rep.native_total}, wrapper {rep.wrapper_native_total}"
    )
    ax.text(0.98, 0.95, note, transform=ax.transAxes, ha="right", va="top")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

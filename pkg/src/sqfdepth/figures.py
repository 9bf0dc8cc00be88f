"""Figures summarizing a scan, rendered next to the JSONL report.

Three small PNGs: the distribution of computed depths, the (s, r) count
plane with violations highlighted, and the per-instance timing
histogram.  Figures whose data is absent from the records (a rule that
never computed a depth, say) are skipped.  matplotlib is imported
lazily with the Agg backend so the package works headless and without
matplotlib unless figures are actually requested.
"""
from __future__ import annotations

from collections import Counter
from pathlib import Path

from .harness import ScanReport


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_scan_figures(report: ScanReport, jsonl_path: str | Path) -> list[Path]:
    """Write the figures for a report next to its JSONL file.

    Returns the list of paths written; the stem of each figure file is
    the stem of the report file.
    """
    plt = _plt()
    base = Path(jsonl_path)
    stem = base.with_suffix("")
    written = []
    title = (
        f"{report.rule}  n={report.params.n} d={report.params.d} "
        f"seed={report.params.seed} count={len(report.records)} "
        f"field={report.field_label}"
    )

    depths = [
        r.data["depth"] for r in report.records if "depth" in r.data
    ]
    if depths:
        counts = Counter(depths)
        xs = sorted(counts)
        fig, ax = plt.subplots(figsize=(5.0, 3.2), dpi=120)
        ax.bar(xs, [counts[x] for x in xs], color="#4878a8", width=0.7)
        ax.set_xlabel("depth")
        ax.set_ylabel("instances")
        ax.set_xticks(xs)
        ax.set_title(title, fontsize=8)
        fig.tight_layout()
        path = stem.parent / (stem.name + "_depths.png")
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

    rs = [
        (r.data["s"], r.data["r"], r.violation, r.hypothesis)
        for r in report.records
        if "r" in r.data and "s" in r.data
    ]
    if rs:
        fig, ax = plt.subplots(figsize=(4.4, 4.0), dpi=120)
        for wanted, color, label in (
            ((False, False), "#b0b0b0", "hypothesis fails"),
            ((False, True), "#3a7d44", "holds"),
            ((True, True), "#c03030", "violation"),
        ):
            xs = [s for s, r, v, h in rs if (v, h) == wanted]
            ys = [r for s, r, v, h in rs if (v, h) == wanted]
            if xs:
                ax.scatter(xs, ys, s=18, c=color, label=label, alpha=0.7)
        top = max(max(s for s, *_ in rs), max(r for _, r, *_ in rs)) + 1
        ax.plot([0, top], [0, top], ls="--", lw=0.8, c="#404040")
        ax.set_xlabel("s (next-degree count)")
        ax.set_ylabel("r (bottom-degree count)")
        ax.set_title(title, fontsize=8)
        ax.legend(fontsize=7)
        fig.tight_layout()
        path = stem.parent / (stem.name + "_rs.png")
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

    timings = [r.elapsed_ms for r in report.records]
    if timings:
        fig, ax = plt.subplots(figsize=(5.0, 3.2), dpi=120)
        ax.hist(timings, bins=min(30, max(5, len(timings) // 4)),
                color="#8a6f9e")
        ax.set_xlabel("per-instance time (ms)")
        ax.set_ylabel("instances")
        ax.set_title(title, fontsize=8)
        fig.tight_layout()
        path = stem.parent / (stem.name + "_timing.png")
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

    return written

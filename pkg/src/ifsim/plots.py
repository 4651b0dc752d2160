"""Figure rendering for sweep results.

One panel per (review-noise, journal-count) pair: mean accuracy against
citation noise, one error-bar line per indicator. Figures are written as
PNG files next to the CSV output; the CSV remains the canonical record.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .experiments import SweepCell


def _series_label(indicator: str, weight_if: float | None) -> str:
    if indicator == "hybrid":
        return f"hybrid ({weight_if:.0%} IF)"
    return {"if": "impact factor", "citations": "citations"}.get(indicator, indicator)


def plot_sweep(cells: list[SweepCell], out_base: Path) -> list[Path]:
    """Render one PNG per panel; file names derive from ``out_base``."""
    out_base = Path(out_base)
    panels: dict[tuple[float, int], list[SweepCell]] = defaultdict(list)
    for cell in cells:
        panels[(cell.sigma_r2, cell.m)].append(cell)

    written = []
    for (sigma_r2, m), panel_cells in sorted(panels.items()):
        series: dict[tuple[str, float | None], list[SweepCell]] = defaultdict(list)
        for cell in panel_cells:
            series[(cell.indicator, cell.weight_if)].append(cell)

        fig, ax = plt.subplots(figsize=(6, 4))
        for (indicator, weight_if), points in sorted(
            series.items(), key=lambda item: (item[0][0], item[0][1] or 0.0)
        ):
            points.sort(key=lambda c: c.sigma_c2)
            ax.errorbar(
                [c.sigma_c2 for c in points],
                [c.accuracy_mean for c in points],
                yerr=[c.accuracy_stderr for c in points],
                marker="o",
                markersize=3,
                capsize=2,
                label=_series_label(indicator, weight_if),
            )
        ax.set_xlabel("citation noise (log-variance)")
        ax.set_ylabel("accuracy (%)")
        ax.set_title(f"review noise = {sigma_r2:g}, {m} journals")
        ax.set_ylim(0, 102)
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()

        path = out_base.with_name(f"{out_base.stem}_sigma_r2_{sigma_r2:g}_m_{m}.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    return written

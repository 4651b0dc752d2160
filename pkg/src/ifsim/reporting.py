"""Serialization: sweep CSV, per-article CSV, and the scenario text report.

All output is byte-stable: fixed column order, fixed sort order, fixed
number formatting, UTF-8 with LF line endings. Accuracies are printed
with six decimal places; article values and citations with full
round-trip precision so every invariant can be re-verified externally.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .experiments import SweepCell
from .model import SimulationOutcome
from .scenario import ScenarioBreakdown, citation_selection_accuracy, if_selection_accuracy

SWEEP_SCHEMA_VERSION = 1

SWEEP_COLUMNS = (
    "schema_version",
    "sigma_r2",
    "sigma_c2",
    "sigma_v2",
    "m",
    "n",
    "alpha",
    "indicator",
    "weight_if",
    "runs",
    "accuracy_mean",
    "accuracy_stderr",
    "master_seed",
)

SIMULATE_COLUMNS = ("article_id", "journal", "value", "citations")


def _param(x: float) -> str:
    return f"{x:g}"


def format_sweep_csv(cells: list[SweepCell]) -> str:
    """Render sweep cells as CSV text, rows in the contractual sort order."""
    if not cells:
        raise ValueError("no sweep cells to write")
    lines = [",".join(SWEEP_COLUMNS)]
    for cell in sorted(cells, key=SweepCell.sort_key):
        weight = "" if cell.weight_if is None else _param(cell.weight_if)
        lines.append(
            ",".join(
                (
                    str(SWEEP_SCHEMA_VERSION),
                    _param(cell.sigma_r2),
                    _param(cell.sigma_c2),
                    _param(cell.sigma_v2),
                    str(cell.m),
                    str(cell.n),
                    _param(cell.alpha),
                    cell.indicator,
                    weight,
                    str(cell.runs),
                    f"{cell.accuracy_mean:.6f}",
                    f"{cell.accuracy_stderr:.6f}",
                    str(cell.master_seed),
                )
            )
        )
    return "\n".join(lines) + "\n"


def format_simulation_csv(outcome: SimulationOutcome) -> str:
    """Per-article dump: id, journal, value, citations, ascending id."""
    lines = [",".join(SIMULATE_COLUMNS)]
    for i in range(outcome.params.n):
        lines.append(
            f"{i},{int(outcome.journals[i])},{float(outcome.values[i])!r},{float(outcome.citations[i])!r}"
        )
    return "\n".join(lines) + "\n"


def _cell(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):g}"


def _table(title: str, row_labels, col_labels, rows) -> list[str]:
    widths = [max(len(col), 12) for col in col_labels]
    label_width = max(len(label) for label in row_labels) + 2
    lines = [title, " " * label_width + "  ".join(col.rjust(w) for col, w in zip(col_labels, widths))]
    for label, row in zip(row_labels, rows):
        cells = "  ".join(text.rjust(w) for text, w in zip(row, widths))
        lines.append(f"  {label.ljust(label_width - 2)}{cells}")
    return lines


def journal_label(index: int) -> str:
    if index < 26:
        return chr(ord("A") + index)
    return str(index + 1)


def format_scenario_report(bd: ScenarioBreakdown, select_count: int) -> str:
    """Plain-text probability and breakdown tables plus both accuracies."""
    scenario = bd.scenario
    q = scenario.cited_given_high
    r = scenario.cited_given_low
    lines = _table(
        "Citedness probabilities by article value",
        ("Low value", "High value"),
        ("Lowly cited", "Highly cited"),
        (
            (_cell(1 - r), _cell(r)),
            (_cell(1 - q), _cell(q)),
        ),
    )
    for index, journal in enumerate(bd.journals):
        lines.append("")
        lines.extend(
            _table(
                f"Journal {journal_label(index)}",
                ("Low value", "High value", "Total"),
                ("Lowly cited", "Highly cited", "Total"),
                (
                    (
                        _cell(journal.low_value_lowly_cited),
                        _cell(journal.low_value_highly_cited),
                        str(journal.low_value),
                    ),
                    (
                        _cell(journal.high_value_lowly_cited),
                        _cell(journal.high_value_highly_cited),
                        str(journal.high_value),
                    ),
                    (
                        _cell(journal.lowly_cited),
                        _cell(journal.highly_cited),
                        str(journal.total),
                    ),
                ),
            )
        )
    if_accuracy = if_selection_accuracy(scenario, select_count)
    citation_accuracy = citation_selection_accuracy(scenario)
    lines.append("")
    lines.append(
        f"IF selection: {float(if_accuracy):.1f}%  "
        f"citation selection: {float(citation_accuracy):.1f}%"
    )
    return "\n".join(lines) + "\n"


def write_text(text: str, destination: Path | None) -> None:
    """Write to a file, or stdout when no destination is given."""
    if destination is None:
        import sys

        sys.stdout.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="\n")

"""Command-line entry point.

Subcommands:
  simulate  one model run, written as a per-article CSV
  sweep     a preset parameter sweep, written as an aggregated CSV
            (optionally with rendered figure panels)
  scenario  the exact discrete-scenario calculator, as a text report

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import (
    ConfigError,
    RunConfig,
    build_scenario_config,
    build_simulate_config,
    build_sweep_config,
    parse_config_text,
)
from .experiments import SWEEP_FUNCTIONS
from .model import run_simulation
from .reporting import (
    format_scenario_report,
    format_simulation_csv,
    format_sweep_csv,
    write_text,
)
from .scenario import breakdown


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsim",
        description="Simulate journal publishing and compare the accuracy of "
        "the journal impact factor, citation counts, and hybrid indicators "
        "at identifying high-value articles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="run the model once and dump per-article data")
    simulate.add_argument("--config", type=Path, help="config file (model.* keys)")
    simulate.add_argument("--seed", type=int, help="override the run seed")
    simulate.add_argument("--out", type=Path, help="output CSV path (default: stdout)")

    sweep = sub.add_parser("sweep", help="run a preset parameter sweep")
    sweep.add_argument("--preset", required=True, choices=("fig1", "fig2", "fig3"))
    sweep.add_argument("--config", type=Path, help="config file (sweep.* keys)")
    sweep.add_argument("--runs", type=int, help="override the number of runs per cell")
    sweep.add_argument("--out", type=Path, help="output CSV path (default: stdout)")
    sweep.add_argument("--workers", type=int, help="worker process count")
    sweep.add_argument(
        "--plot",
        action="store_true",
        help="also render PNG figure panels next to the CSV (requires --out)",
    )

    scenario = sub.add_parser("scenario", help="exact discrete-scenario calculator")
    scenario.add_argument("which", choices=("1", "2", "custom"))
    scenario.add_argument("--config", type=Path, help="config file (scenario.* keys)")
    scenario.add_argument("--out", type=Path, help="output report path (default: stdout)")

    return parser


def _load_config_file(path: Path | None) -> dict[str, str]:
    if path is None:
        return {}
    return parse_config_text(path.read_text(encoding="utf-8"))


def _run_simulate(args) -> None:
    config = build_simulate_config(
        _load_config_file(args.config), seed=args.seed, out=args.out
    )
    outcome = run_simulation(config.model)
    write_text(format_simulation_csv(outcome), config.out)


def _run_sweep(args) -> None:
    config = build_sweep_config(
        args.preset,
        _load_config_file(args.config),
        runs=args.runs,
        workers=args.workers,
        out=args.out,
        plot=args.plot,
    )
    if config.plot and config.out is None:
        raise ConfigError("--plot requires --out to name the output files")
    cells = SWEEP_FUNCTIONS[config.preset](config.sweep, workers=config.workers)
    csv_text = format_sweep_csv(cells)
    write_text(csv_text, config.out)
    if config.plot:
        from .plots import plot_sweep

        plot_sweep(cells, config.out)


def _run_scenario(args) -> None:
    config = build_scenario_config(
        args.which, _load_config_file(args.config), out=args.out
    )
    select_count = config.select_count
    if select_count is None:
        select_count = config.scenario.total_high_value
    bd = breakdown(config.scenario)
    write_text(format_scenario_report(bd, select_count), config.out)


_COMMANDS = {"simulate": _run_simulate, "sweep": _run_sweep, "scenario": _run_scenario}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (ConfigError, ValueError) as exc:
        print(f"ifsim: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ifsim: i/o error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Replicated runs and the preset parameter sweeps.

A sweep cell is one (sigma_r2, sigma_c2, m) parameter point evaluated with
one indicator over many runs. The seed of run r depends only on the cell
parameters and the master seed, never on the indicator, so every indicator
is scored on the same simulated worlds (common random numbers) and accuracy
differences between indicators are paired statistics.
"""

from __future__ import annotations

import math
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .metrics import AccuracySpec, citation_scores, hybrid_scores, if_scores, selection_accuracy
from .model import ModelParams, SimulationOutcome, run_simulation
from .rng import _mix64, derive_seed

DEFAULT_TOTAL_LOG_VARIANCE = 1.3
DEFAULT_MASTER_SEED = 42

INDICATOR_KINDS = ("citations", "if", "hybrid")


@dataclass(frozen=True)
class Indicator:
    """An article scoring rule: pure citations, pure IF, or a weighted mix."""

    kind: str
    weight_if: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in INDICATOR_KINDS:
            raise ValueError(f"unknown indicator kind {self.kind!r}")
        if self.kind == "hybrid":
            if self.weight_if is None or not 0 <= self.weight_if <= 1:
                raise ValueError(f"hybrid indicator needs weight_if in [0, 1], got {self.weight_if}")
        elif self.weight_if is not None:
            raise ValueError(f"weight_if only applies to the hybrid indicator, got kind {self.kind!r}")

    def scores(self, outcome: SimulationOutcome) -> np.ndarray:
        if self.kind == "citations":
            return citation_scores(outcome)
        if self.kind == "if":
            return if_scores(outcome)
        return hybrid_scores(outcome, self.weight_if)


def default_sigma_c2_grid(
    total_log_variance: float = DEFAULT_TOTAL_LOG_VARIANCE, step: float = 0.05
) -> tuple[float, ...]:
    """Evenly spaced citation-noise grid from 0 to the total log-variance."""
    count = int(round(total_log_variance / step)) + 1
    return tuple(round(i * step, 10) for i in range(count))


@dataclass(frozen=True)
class SweepSpec:
    """Grid of experiment configurations plus replication settings."""

    sigma_r2_list: tuple[float, ...] = (0.0, 0.4, 0.8, 1.6)
    sigma_c2_grid: tuple[float, ...] = field(default_factory=default_sigma_c2_grid)
    m_list: tuple[int, ...] = (20,)
    weight_if_list: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 1.0)
    runs: int = 1000
    n: int = 2000
    alpha: float = 0.1
    total_log_variance: float = DEFAULT_TOTAL_LOG_VARIANCE
    master_seed: int = DEFAULT_MASTER_SEED

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        for sr in self.sigma_r2_list:
            if sr < 0:
                raise ValueError(f"sigma_r2 must be >= 0, got {sr}")
        for sc in self.sigma_c2_grid:
            if not 0 <= sc <= self.total_log_variance + 1e-12:
                raise ValueError(
                    f"sigma_c2={sc} outside [0, total_log_variance={self.total_log_variance}]"
                )
        for m in self.m_list:
            if m < 1 or self.n % m != 0:
                raise ValueError(f"every m must divide n exactly: n={self.n}, m={m}")
        for w in self.weight_if_list:
            if not 0 <= w <= 1:
                raise ValueError(f"weight_if must lie in [0, 1], got {w}")


@dataclass(frozen=True)
class SweepCell:
    """Aggregated accuracy of one indicator at one parameter point."""

    sigma_r2: float
    sigma_c2: float
    sigma_v2: float
    m: int
    n: int
    alpha: float
    indicator: str
    weight_if: float | None
    runs: int
    accuracy_mean: float
    accuracy_stderr: float
    master_seed: int

    def sort_key(self):
        weight = -1.0 if self.weight_if is None else self.weight_if
        return (self.sigma_r2, self.m, self.indicator, weight, self.sigma_c2)


def _float_bits(x: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def cell_tag(sigma_r2: float, sigma_c2: float, m: int) -> int:
    """Stable 64-bit tag of a cell's world-defining parameters.

    Deliberately excludes the indicator kind and hybrid weight so that all
    indicators see the same worlds, and excludes everything else so that
    adding cells to a spec never changes existing cells' run seeds.
    """
    h = _mix64(_float_bits(sigma_r2))
    h = _mix64(h ^ _float_bits(sigma_c2))
    h = _mix64(h ^ m)
    return h


def run_seed(master_seed: int, tag: int, run_index: int) -> int:
    """Seed of one run inside one cell; pure function of all three inputs."""
    return derive_seed(master_seed, tag ^ run_index)


def sigma_v2_for(sigma_c2: float, total_log_variance: float) -> float:
    """Value-noise variance implied by the total-log-variance calibration."""
    sigma_v2 = round(total_log_variance - sigma_c2, 10)
    if sigma_v2 < 0:
        raise ValueError(
            f"sigma_c2={sigma_c2} exceeds total_log_variance={total_log_variance}"
        )
    return sigma_v2


def replicated_accuracies(
    sigma_r2: float,
    sigma_c2: float,
    m: int,
    indicators: tuple[Indicator, ...],
    *,
    n: int,
    alpha: float,
    runs: int,
    master_seed: int,
    total_log_variance: float = DEFAULT_TOTAL_LOG_VARIANCE,
) -> dict[Indicator, np.ndarray]:
    """Per-run accuracies of every indicator on the same simulated worlds."""
    spec = AccuracySpec(alpha)
    sigma_v2 = sigma_v2_for(sigma_c2, total_log_variance)
    tag = cell_tag(sigma_r2, sigma_c2, m)
    accuracies = {ind: np.empty(runs) for ind in indicators}
    for r in range(runs):
        params = ModelParams(
            n=n,
            m=m,
            sigma_v2=sigma_v2,
            sigma_c2=sigma_c2,
            sigma_r2=sigma_r2,
            seed=run_seed(master_seed, tag, r),
        )
        outcome = run_simulation(params)
        for ind in indicators:
            accuracies[ind][r] = selection_accuracy(ind.scores(outcome), outcome.values, spec)
    return accuracies


def summarize(accuracies: np.ndarray) -> tuple[float, float]:
    """Mean and standard error of per-run accuracies, in run order."""
    mean = float(np.mean(accuracies))
    if accuracies.size < 2:
        return mean, 0.0
    stderr = float(np.std(accuracies, ddof=1) / math.sqrt(accuracies.size))
    return mean, stderr


def run_replicated(
    sigma_r2: float,
    sigma_c2: float,
    m: int,
    indicator: Indicator,
    *,
    n: int,
    alpha: float,
    runs: int,
    master_seed: int,
    total_log_variance: float = DEFAULT_TOTAL_LOG_VARIANCE,
) -> SweepCell:
    """Aggregate one indicator at one parameter point into a SweepCell."""
    accuracies = replicated_accuracies(
        sigma_r2,
        sigma_c2,
        m,
        (indicator,),
        n=n,
        alpha=alpha,
        runs=runs,
        master_seed=master_seed,
        total_log_variance=total_log_variance,
    )[indicator]
    mean, stderr = summarize(accuracies)
    return SweepCell(
        sigma_r2=sigma_r2,
        sigma_c2=sigma_c2,
        sigma_v2=sigma_v2_for(sigma_c2, total_log_variance),
        m=m,
        n=n,
        alpha=alpha,
        indicator=indicator.kind,
        weight_if=indicator.weight_if,
        runs=runs,
        accuracy_mean=mean,
        accuracy_stderr=stderr,
        master_seed=master_seed,
    )


def _grid_worker(args) -> list[tuple[float, float]]:
    spec, sigma_r2, sigma_c2, m, indicators = args
    accuracies = replicated_accuracies(
        sigma_r2,
        sigma_c2,
        m,
        indicators,
        n=spec.n,
        alpha=spec.alpha,
        runs=spec.runs,
        master_seed=spec.master_seed,
        total_log_variance=spec.total_log_variance,
    )
    return [summarize(accuracies[ind]) for ind in indicators]


def run_grid(spec: SweepSpec, indicators: tuple[Indicator, ...], workers: int = 1) -> list[SweepCell]:
    """Evaluate the spec's full parameter grid with the given indicators.

    Cells are independent work units; results are identical for any worker
    count because each cell is a pure function of the spec.
    """
    tasks = [
        (spec, sigma_r2, sigma_c2, m, indicators)
        for sigma_r2 in spec.sigma_r2_list
        for m in spec.m_list
        for sigma_c2 in spec.sigma_c2_grid
    ]
    if workers <= 1 or len(tasks) <= 1:
        results = [_grid_worker(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_grid_worker, tasks))
    cells = []
    for (_, sigma_r2, sigma_c2, m, _), summaries in zip(tasks, results):
        for ind, (mean, stderr) in zip(indicators, summaries):
            cells.append(
                SweepCell(
                    sigma_r2=sigma_r2,
                    sigma_c2=sigma_c2,
                    sigma_v2=sigma_v2_for(sigma_c2, spec.total_log_variance),
                    m=m,
                    n=spec.n,
                    alpha=spec.alpha,
                    indicator=ind.kind,
                    weight_if=ind.weight_if,
                    runs=spec.runs,
                    accuracy_mean=mean,
                    accuracy_stderr=stderr,
                    master_seed=spec.master_seed,
                )
            )
    cells.sort(key=SweepCell.sort_key)
    return cells


PURE_INDICATORS = (Indicator("if"), Indicator("citations"))


def sweep_figure1(spec: SweepSpec, workers: int = 1) -> list[SweepCell]:
    """IF vs citations over review noise x citation noise, fixed journal count."""
    return run_grid(spec, PURE_INDICATORS, workers=workers)


def sweep_figure2(spec: SweepSpec, workers: int = 1) -> list[SweepCell]:
    """IF vs citations as the journal count varies at fixed review noise."""
    return run_grid(spec, PURE_INDICATORS, workers=workers)


def sweep_figure3(spec: SweepSpec, workers: int = 1) -> list[SweepCell]:
    """Hybrid indicators across the spec's IF-weight list."""
    indicators = tuple(Indicator("hybrid", w) for w in spec.weight_if_list)
    return run_grid(spec, indicators, workers=workers)


def preset_fig1(**overrides) -> SweepSpec:
    defaults = dict(sigma_r2_list=(0.0, 0.4, 0.8, 1.6), m_list=(20,))
    defaults.update(overrides)
    return SweepSpec(**defaults)


def preset_fig2(**overrides) -> SweepSpec:
    defaults = dict(sigma_r2_list=(0.4,), m_list=(10, 40))
    defaults.update(overrides)
    return SweepSpec(**defaults)


def preset_fig3(**overrides) -> SweepSpec:
    defaults = dict(sigma_r2_list=(0.4,), m_list=(20,))
    defaults.update(overrides)
    return SweepSpec(**defaults)


PRESETS = {"fig1": preset_fig1, "fig2": preset_fig2, "fig3": preset_fig3}
SWEEP_FUNCTIONS = {"fig1": sweep_figure1, "fig2": sweep_figure2, "fig3": sweep_figure3}

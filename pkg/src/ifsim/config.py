"""Configuration parsing for the command-line tool.

The config format is line-oriented ``key = value`` text with ``#``
comments and dotted keys for nesting, e.g.::

    sweep.runs = 1000
    sweep.sigma_r2_list = 0, 0.4
    model.seed = 42

Precedence: command-line flags override file values, which override the
preset defaults. Unknown keys and invariant violations are reported with
the offending key name, and no work starts before validation passes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .experiments import PRESETS, SweepSpec
from .model import ModelParams
from .scenario import DiscreteScenario, scenario_1, scenario_2

WORKERS_ENV_VAR = "INDICATOR_SIM_WORKERS"

DEFAULT_MODEL = ModelParams(n=2000, m=20, sigma_v2=0.65, sigma_c2=0.65, sigma_r2=0.4, seed=42)


class ConfigError(ValueError):
    """A configuration key is unknown, malformed, or violates an invariant."""


@dataclass
class RunConfig:
    """Fully validated description of one CLI invocation."""

    command: str
    preset: str = "custom"
    sweep: SweepSpec | None = None
    model: ModelParams | None = None
    scenario: DiscreteScenario | None = None
    select_count: int | None = None
    workers: int = 1
    out: Path | None = None
    plot: bool = False


def parse_config_text(text: str) -> dict[str, str]:
    """Raw key -> value strings from config text; syntax errors name the line."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value
    return values


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {value!r}") from None


def _parse_float_list(key: str, value: str) -> tuple[float, ...]:
    items = [item.strip() for item in value.split(",") if item.strip()]
    if not items:
        raise ConfigError(f"{key}: expected a comma-separated list of numbers")
    return tuple(_parse_float(key, item) for item in items)


def _parse_int_list(key: str, value: str) -> tuple[int, ...]:
    items = [item.strip() for item in value.split(",") if item.strip()]
    if not items:
        raise ConfigError(f"{key}: expected a comma-separated list of integers")
    return tuple(_parse_int(key, item) for item in items)


def _parse_journals(key: str, value: str) -> tuple[tuple[int, int], ...]:
    # e.g. "80/20, 20/80" meaning high_value/low_value per journal
    journals = []
    for item in value.split(","):
        item = item.strip()
        if "/" not in item:
            raise ConfigError(
                f"{key}: expected 'high/low' pairs such as '80/20, 20/80', got {item!r}"
            )
        high, _, low = item.partition("/")
        journals.append((_parse_int(key, high.strip()), _parse_int(key, low.strip())))
    if not journals:
        raise ConfigError(f"{key}: expected at least one journal")
    return tuple(journals)


_SWEEP_FIELDS = {
    "sweep.runs": ("runs", _parse_int),
    "sweep.n": ("n", _parse_int),
    "sweep.alpha": ("alpha", _parse_float),
    "sweep.master_seed": ("master_seed", _parse_int),
    "sweep.total_log_variance": ("total_log_variance", _parse_float),
    "sweep.sigma_r2_list": ("sigma_r2_list", _parse_float_list),
    "sweep.sigma_c2_grid": ("sigma_c2_grid", _parse_float_list),
    "sweep.m_list": ("m_list", _parse_int_list),
    "sweep.weight_if_list": ("weight_if_list", _parse_float_list),
}

_MODEL_FIELDS = {
    "model.n": ("n", _parse_int),
    "model.m": ("m", _parse_int),
    "model.sigma_v2": ("sigma_v2", _parse_float),
    "model.sigma_c2": ("sigma_c2", _parse_float),
    "model.sigma_r2": ("sigma_r2", _parse_float),
    "model.seed": ("seed", _parse_int),
}

_SCENARIO_FIELDS = {
    "scenario.cited_given_high": "cited_given_high",
    "scenario.cited_given_low": "cited_given_low",
    "scenario.journals": "journals",
    "scenario.select_count": "select_count",
}

_COMMON_FIELDS = {"workers"}


def _split_known(
    values: dict[str, str], allowed: set[str]
) -> dict[str, str]:
    unknown = sorted(set(values) - allowed - _COMMON_FIELDS)
    if unknown:
        raise ConfigError(f"unknown key {unknown[0]!r}")
    return values


def _workers_from(values: dict[str, str], flag: int | None) -> int:
    # precedence: flag > config file > environment > 1
    if flag is not None:
        workers = flag
    elif "workers" in values:
        workers = _parse_int("workers", values["workers"])
    elif os.environ.get(WORKERS_ENV_VAR):
        workers = _parse_int(WORKERS_ENV_VAR, os.environ[WORKERS_ENV_VAR])
    else:
        workers = 1
    if workers < 1:
        raise ConfigError(f"workers: must be >= 1, got {workers}")
    return workers


def build_sweep_config(
    preset: str,
    file_values: dict[str, str] | None = None,
    *,
    runs: int | None = None,
    master_seed: int | None = None,
    workers: int | None = None,
    out: Path | None = None,
    plot: bool = False,
) -> RunConfig:
    """Sweep configuration from preset defaults, file values, and flags."""
    if preset not in PRESETS:
        raise ConfigError(f"preset: expected one of {sorted(PRESETS)}, got {preset!r}")
    values = _split_known(dict(file_values or {}), set(_SWEEP_FIELDS))
    overrides = {}
    for key, (field_name, parse) in _SWEEP_FIELDS.items():
        if key in values:
            overrides[field_name] = parse(key, values[key])
    if runs is not None:
        overrides["runs"] = runs
    if master_seed is not None:
        overrides["master_seed"] = master_seed
    try:
        spec = PRESETS[preset](**overrides)
    except ValueError as exc:
        raise ConfigError(f"sweep: {exc}") from None
    return RunConfig(
        command="sweep",
        preset=preset,
        sweep=spec,
        workers=_workers_from(values, workers),
        out=out,
        plot=plot,
    )


def build_simulate_config(
    file_values: dict[str, str] | None = None,
    *,
    seed: int | None = None,
    workers: int | None = None,
    out: Path | None = None,
) -> RunConfig:
    """Single-run configuration from defaults, file values, and flags."""
    values = _split_known(dict(file_values or {}), set(_MODEL_FIELDS))
    overrides = {}
    for key, (field_name, parse) in _MODEL_FIELDS.items():
        if key in values:
            overrides[field_name] = parse(key, values[key])
    if seed is not None:
        overrides["seed"] = seed
    try:
        params = replace(DEFAULT_MODEL, **overrides)
    except ValueError as exc:
        raise ConfigError(f"model: {exc}") from None
    return RunConfig(
        command="simulate",
        model=params,
        workers=_workers_from(values, workers),
        out=out,
    )


def build_scenario_config(
    which: str,
    file_values: dict[str, str] | None = None,
    *,
    out: Path | None = None,
) -> RunConfig:
    """Scenario configuration: one of the two presets, or a custom setup."""
    values = dict(file_values or {})
    select_count = None
    if which in ("1", "2"):
        _split_known(values, {"scenario.select_count"})
        scenario = scenario_1() if which == "1" else scenario_2()
    elif which == "custom":
        _split_known(values, set(_SCENARIO_FIELDS))
        try:
            scenario = DiscreteScenario(
                cited_given_high=Fraction(values.get("scenario.cited_given_high", "1")),
                cited_given_low=Fraction(values.get("scenario.cited_given_low", "0")),
                journals=_parse_journals(
                    "scenario.journals", values.get("scenario.journals", "")
                ),
            )
        except ConfigError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"scenario: {exc}") from None
    else:
        raise ConfigError(f"scenario: expected '1', '2', or 'custom', got {which!r}")
    if "scenario.select_count" in values:
        select_count = _parse_int("scenario.select_count", values["scenario.select_count"])
        if select_count < 1:
            raise ConfigError(f"scenario.select_count: must be >= 1, got {select_count}")
    return RunConfig(
        command="scenario",
        preset=which,
        scenario=scenario,
        select_count=select_count,
        out=out,
    )


def _format_value(value) -> str:
    if isinstance(value, tuple):
        return ", ".join(_format_value(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_config(config: RunConfig) -> str:
    """Serialize a RunConfig back to config text; re-parsing is lossless."""
    lines = [f"# ifsim {config.command} configuration"]
    if config.sweep is not None:
        for key, (field_name, _) in _SWEEP_FIELDS.items():
            lines.append(f"{key} = {_format_value(getattr(config.sweep, field_name))}")
    if config.model is not None:
        for key, (field_name, _) in _MODEL_FIELDS.items():
            lines.append(f"{key} = {_format_value(getattr(config.model, field_name))}")
    if config.scenario is not None:
        lines.append(f"scenario.cited_given_high = {config.scenario.cited_given_high}")
        lines.append(f"scenario.cited_given_low = {config.scenario.cited_given_low}")
        journals = ", ".join(f"{h}/{l}" for h, l in config.scenario.journals)
        lines.append(f"scenario.journals = {journals}")
        if config.select_count is not None:
            lines.append(f"scenario.select_count = {config.select_count}")
    if config.command != "scenario":
        lines.append(f"workers = {config.workers}")
    return "\n".join(lines) + "\n"

"""Monte Carlo study of journal-level versus article-level impact indicators.

The package simulates a field of journals: articles draw a latent value,
cascade through peer review in prestige order, and accumulate citations.
It then measures how accurately the journal impact factor, per-article
citation counts, and hybrid weighted indicators recover the truly
high-value articles, alongside an exact calculator for the discrete
two-journal illustration of the same question.
"""

from .experiments import (
    Indicator,
    SweepCell,
    SweepSpec,
    run_replicated,
    sweep_figure1,
    sweep_figure2,
    sweep_figure3,
)
from .metrics import (
    AccuracySpec,
    citation_scores,
    high_value_set,
    hybrid_scores,
    if_scores,
    selection_accuracy,
    top_k_indices,
)
from .model import (
    Article,
    ModelParams,
    SimulationOutcome,
    assign_journals,
    compute_impact_factors,
    run_simulation,
    sample_citations,
    sample_values,
)
from .rng import (
    RngState,
    derive_substream,
    sample_lognormal_unit_mean,
    sample_standard_normal,
)
from .scenario import (
    DiscreteScenario,
    breakdown,
    citation_selection_accuracy,
    if_ranking,
    if_selection_accuracy,
    scenario_1,
    scenario_2,
)

__all__ = [
    "AccuracySpec",
    "Article",
    "DiscreteScenario",
    "Indicator",
    "ModelParams",
    "RngState",
    "SimulationOutcome",
    "SweepCell",
    "SweepSpec",
    "assign_journals",
    "breakdown",
    "citation_scores",
    "citation_selection_accuracy",
    "compute_impact_factors",
    "derive_substream",
    "high_value_set",
    "hybrid_scores",
    "if_ranking",
    "if_scores",
    "if_selection_accuracy",
    "run_replicated",
    "run_simulation",
    "sample_citations",
    "sample_lognormal_unit_mean",
    "sample_standard_normal",
    "sample_values",
    "scenario_1",
    "scenario_2",
    "selection_accuracy",
    "sweep_figure1",
    "sweep_figure2",
    "sweep_figure3",
    "top_k_indices",
]

"""Indicator scoring and top-share selection accuracy.

An indicator assigns every article a score; its accuracy is the percentage
of the round(alpha * n) highest-scored articles that truly belong to the
round(alpha * n) highest-value articles. Scores and values are keyed by
article id throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import SimulationOutcome


@dataclass(frozen=True)
class AccuracySpec:
    """Share of articles deemed high-value; reported accuracy is 0..100."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")

    def selection_size(self, n: int) -> int:
        # round-half-up; Python's round() would round halves to even
        k = math.floor(self.alpha * n + 0.5)
        if k < 1:
            raise ValueError(f"alpha={self.alpha} selects zero articles out of n={n}")
        return k


def top_k_indices(scores, k: int) -> np.ndarray:
    """Ids of the k highest scores, ties going to the lower id.

    Returns the ids in ascending order; the selection is independent of
    how the caller stores the scores because ids are positional.
    """
    scores = np.asarray(scores, dtype=float)
    if not 1 <= k <= scores.size:
        raise ValueError(f"k must lie in [1, {scores.size}], got {k}")
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    # stable sort on negated scores keeps ascending id order within ties
    order = np.argsort(-scores, kind="stable")
    return np.sort(order[:k])


def high_value_set(values, spec: AccuracySpec) -> np.ndarray:
    """Ids of the round(alpha * n) articles with the highest true values."""
    values = np.asarray(values, dtype=float)
    return top_k_indices(values, spec.selection_size(values.size))


def selection_accuracy(scores, values, spec: AccuracySpec) -> float:
    """Percent of the indicator's top picks that are truly high-value."""
    scores = np.asarray(scores, dtype=float)
    values = np.asarray(values, dtype=float)
    if scores.shape != values.shape:
        raise ValueError(f"length mismatch: {scores.shape} scores vs {values.shape} values")
    k = spec.selection_size(values.size)
    selected = top_k_indices(scores, k)
    high_value = top_k_indices(values, k)
    overlap = np.intersect1d(selected, high_value, assume_unique=True).size
    return 100.0 * overlap / k


def citation_scores(outcome: SimulationOutcome) -> np.ndarray:
    """Score every article by its own citation count."""
    return outcome.citations


def if_scores(outcome: SimulationOutcome) -> np.ndarray:
    """Score every article by the impact factor of its journal.

    All articles in one journal share a score; the indicator carries no
    within-journal information.
    """
    return outcome.impact_factors[outcome.journals - 1]


def hybrid_scores(outcome: SimulationOutcome, weight_if: float) -> np.ndarray:
    """Weighted average of the journal impact factor and own citations.

    Both components already have unit mean in this model, so no rescaling
    is needed before averaging.
    """
    if not 0 <= weight_if <= 1:
        raise ValueError(f"weight_if must lie in [0, 1], got {weight_if}")
    return weight_if * if_scores(outcome) + (1.0 - weight_if) * citation_scores(outcome)

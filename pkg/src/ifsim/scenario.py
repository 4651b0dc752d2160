"""Exact expected-value arithmetic for the discrete two-state setup.

Articles are either high- or low-value and either highly or lowly cited.
Given the citedness probabilities conditional on value and the value
composition of each journal, the expected 2x2 breakdown per journal and
the accuracy of journal-level versus citation-level selection follow by
exact rational arithmetic; for rational inputs every result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _as_probability(x, name: str) -> Fraction:
    p = Fraction(x) if not isinstance(x, float) else Fraction(str(x))
    if not 0 <= p <= 1:
        raise ValueError(f"{name} must lie in [0, 1], got {x}")
    return p


@dataclass(frozen=True)
class DiscreteScenario:
    """Citedness probabilities plus the value composition of each journal.

    ``cited_given_high`` / ``cited_given_low`` are the probabilities that a
    high- or low-value article is highly cited. ``journals`` lists, in
    prestige order, ``(high_value_count, low_value_count)`` pairs.
    """

    cited_given_high: Fraction
    cited_given_low: Fraction
    journals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cited_given_high", _as_probability(self.cited_given_high, "cited_given_high"))
        object.__setattr__(self, "cited_given_low", _as_probability(self.cited_given_low, "cited_given_low"))
        object.__setattr__(self, "journals", tuple((int(h), int(l)) for h, l in self.journals))
        if not self.journals:
            raise ValueError("at least one journal is required")
        for h, l in self.journals:
            if h < 0 or l < 0:
                raise ValueError(f"article counts must be non-negative, got ({h}, {l})")
        if self.total_articles < 1:
            raise ValueError("total article count must be >= 1")

    @property
    def total_high_value(self) -> int:
        return sum(h for h, _ in self.journals)

    @property
    def total_low_value(self) -> int:
        return sum(l for _, l in self.journals)

    @property
    def total_articles(self) -> int:
        return self.total_high_value + self.total_low_value


def scenario_1() -> DiscreteScenario:
    """Accurate citations: 90% of high-value articles are highly cited."""
    return DiscreteScenario(
        cited_given_high=Fraction(9, 10),
        cited_given_low=Fraction(1, 10),
        journals=((80, 20), (20, 80)),
    )


def scenario_2() -> DiscreteScenario:
    """Inaccurate citations: only 70% of high-value articles are highly cited."""
    return DiscreteScenario(
        cited_given_high=Fraction(7, 10),
        cited_given_low=Fraction(3, 10),
        journals=((80, 20), (20, 80)),
    )


@dataclass(frozen=True)
class JournalBreakdown:
    """Expected article counts of one journal in the value x citedness grid."""

    high_value: int
    low_value: int
    high_value_highly_cited: Fraction
    high_value_lowly_cited: Fraction
    low_value_highly_cited: Fraction
    low_value_lowly_cited: Fraction

    @property
    def total(self) -> int:
        return self.high_value + self.low_value

    @property
    def highly_cited(self) -> Fraction:
        return self.high_value_highly_cited + self.low_value_highly_cited

    @property
    def lowly_cited(self) -> Fraction:
        return self.high_value_lowly_cited + self.low_value_lowly_cited

    @property
    def highly_cited_share(self) -> Fraction:
        return self.highly_cited / self.total


@dataclass(frozen=True)
class ScenarioBreakdown:
    scenario: DiscreteScenario
    journals: tuple[JournalBreakdown, ...]


def breakdown(scenario: DiscreteScenario) -> ScenarioBreakdown:
    """Expected per-journal 2x2 counts; cells of each journal sum to its size."""
    q = scenario.cited_given_high
    r = scenario.cited_given_low
    journals = tuple(
        JournalBreakdown(
            high_value=h,
            low_value=l,
            high_value_highly_cited=q * h,
            high_value_lowly_cited=(1 - q) * h,
            low_value_highly_cited=r * l,
            low_value_lowly_cited=(1 - r) * l,
        )
        for h, l in scenario.journals
    )
    return ScenarioBreakdown(scenario=scenario, journals=journals)


def if_ranking(bd: ScenarioBreakdown) -> list[int]:
    """Journal indices ordered by descending expected highly-cited share.

    A journal's highly-cited share is its expected impact factor stand-in
    here. Ties keep the original listing order.
    """
    indices = list(range(len(bd.journals)))
    indices.sort(key=lambda j: -bd.journals[j].highly_cited_share)
    return indices


def if_selection_accuracy(scenario: DiscreteScenario, select_count: int) -> Fraction:
    """Percent of high-value articles among whole journals taken in IF order.

    ``select_count`` must land exactly on a journal boundary along the
    ranking; journal-level selection cannot split a journal.
    """
    if select_count < 1:
        raise ValueError(f"select_count must be >= 1, got {select_count}")
    bd = breakdown(scenario)
    ranking = if_ranking(bd)
    taken = 0
    high_value_taken = 0
    for j in ranking:
        if taken == select_count:
            break
        taken += bd.journals[j].total
        high_value_taken += bd.journals[j].high_value
        if taken > select_count:
            raise ValueError(
                f"select_count={select_count} does not align with a journal boundary "
                f"along the IF ranking"
            )
    if taken != select_count:
        raise ValueError(
            f"select_count={select_count} exceeds the total of {taken} articles"
        )
    return Fraction(100) * high_value_taken / select_count


def citation_selection_accuracy(scenario: DiscreteScenario) -> Fraction:
    """Expected percent of high-value articles among all highly cited ones."""
    q = scenario.cited_given_high
    r = scenario.cited_given_low
    highly_cited_high = q * scenario.total_high_value
    highly_cited_total = highly_cited_high + r * scenario.total_low_value
    if highly_cited_total == 0:
        raise ValueError("no articles are expected to be highly cited")
    return Fraction(100) * highly_cited_high / highly_cited_total

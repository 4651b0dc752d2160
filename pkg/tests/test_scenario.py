"""Tests for the exact discrete-scenario calculator."""

from fractions import Fraction

import pytest

from ifsim.scenario import (
    DiscreteScenario,
    breakdown,
    citation_selection_accuracy,
    if_ranking,
    if_selection_accuracy,
    scenario_1,
    scenario_2,
)


class TestBreakdown:
    def test_scenario_1_highly_cited_totals(self):
        bd = breakdown(scenario_1())
        assert bd.journals[0].highly_cited == 74
        assert bd.journals[1].highly_cited == 26

    def test_scenario_2_highly_cited_totals(self):
        bd = breakdown(scenario_2())
        assert bd.journals[0].highly_cited == 62
        assert bd.journals[1].highly_cited == 38

    def test_scenario_1_journal_a_cells(self):
        a = breakdown(scenario_1()).journals[0]
        assert (a.low_value_lowly_cited, a.low_value_highly_cited) == (18, 2)
        assert (a.high_value_lowly_cited, a.high_value_highly_cited) == (8, 72)

    def test_scenario_2_journal_a_cells(self):
        a = breakdown(scenario_2()).journals[0]
        assert (a.low_value_lowly_cited, a.low_value_highly_cited) == (14, 6)
        assert (a.high_value_lowly_cited, a.high_value_highly_cited) == (24, 56)

    def test_cells_sum_to_journal_size(self):
        scenario = DiscreteScenario(Fraction(3, 7), Fraction(2, 11), ((13, 5), (4, 9), (0, 6)))
        for journal in breakdown(scenario).journals:
            total = (
                journal.high_value_highly_cited
                + journal.high_value_lowly_cited
                + journal.low_value_highly_cited
                + journal.low_value_lowly_cited
            )
            assert total == journal.total

    def test_conservation_across_journals(self):
        scenario = scenario_1()
        bd = breakdown(scenario)
        assert sum(j.highly_cited for j in bd.journals) == (
            scenario.cited_given_high * scenario.total_high_value
            + scenario.cited_given_low * scenario.total_low_value
        )
        assert sum(j.lowly_cited for j in bd.journals) + sum(
            j.highly_cited for j in bd.journals
        ) == scenario.total_articles


class TestRanking:
    def test_scenario_1_a_before_b(self):
        assert if_ranking(breakdown(scenario_1())) == [0, 1]

    def test_scenario_2_a_before_b(self):
        assert if_ranking(breakdown(scenario_2())) == [0, 1]

    def test_symmetric_tie_keeps_listed_order(self):
        scenario = DiscreteScenario(Fraction(9, 10), Fraction(1, 10), ((50, 50), (50, 50)))
        assert if_ranking(breakdown(scenario)) == [0, 1]


class TestSelectionAccuracy:
    def test_scenario_1(self):
        assert if_selection_accuracy(scenario_1(), 100) == 80
        assert citation_selection_accuracy(scenario_1()) == 90

    def test_scenario_2(self):
        assert if_selection_accuracy(scenario_2(), 100) == 80
        assert citation_selection_accuracy(scenario_2()) == 70

    def test_results_are_exact_rationals(self):
        assert if_selection_accuracy(scenario_1(), 100) == Fraction(80)
        assert citation_selection_accuracy(scenario_2()) == Fraction(70)

    def test_one_journal_degenerate(self):
        scenario = DiscreteScenario(Fraction(1, 2), Fraction(1, 2), ((30, 70),))
        assert if_selection_accuracy(scenario, 100) == 30

    def test_boundary_violation(self):
        with pytest.raises(ValueError, match="boundary"):
            if_selection_accuracy(scenario_1(), 150)

    def test_select_count_too_large(self):
        with pytest.raises(ValueError):
            if_selection_accuracy(scenario_1(), 300)

    def test_uninformative_citations_give_marginal_share(self):
        scenario = DiscreteScenario(Fraction(2, 5), Fraction(2, 5), ((80, 20), (20, 80)))
        assert citation_selection_accuracy(scenario) == 50  # overall high-value share

    def test_zero_highly_cited_rejected(self):
        scenario = DiscreteScenario(0, 0, ((10, 10),))
        with pytest.raises(ValueError):
            citation_selection_accuracy(scenario)

    def test_crossover_between_scenarios(self):
        # the central reversal: citations win with accurate citedness,
        # the journal-level rule wins with inaccurate citedness
        assert citation_selection_accuracy(scenario_1()) > if_selection_accuracy(scenario_1(), 100)
        assert citation_selection_accuracy(scenario_2()) < if_selection_accuracy(scenario_2(), 100)


class TestValidation:
    def test_probability_domain(self):
        with pytest.raises(ValueError):
            DiscreteScenario(Fraction(3, 2), Fraction(1, 10), ((1, 1),))

    def test_negative_counts(self):
        with pytest.raises(ValueError):
            DiscreteScenario(Fraction(1, 2), Fraction(1, 2), ((-1, 5),))

    def test_requires_a_journal(self):
        with pytest.raises(ValueError):
            DiscreteScenario(Fraction(1, 2), Fraction(1, 2), ())

    def test_q_below_r_is_allowed(self):
        scenario = DiscreteScenario(Fraction(1, 10), Fraction(9, 10), ((80, 20), (20, 80)))
        assert citation_selection_accuracy(scenario) == 10

"""Tests for indicator scoring and top-share selection accuracy."""

import numpy as np
import pytest

from ifsim.metrics import (
    AccuracySpec,
    citation_scores,
    high_value_set,
    hybrid_scores,
    if_scores,
    selection_accuracy,
    top_k_indices,
)
from ifsim.model import ModelParams, SimulationOutcome, compute_impact_factors, run_simulation


def make_outcome(values, citations, journals, m):
    values = np.asarray(values, dtype=float)
    citations = np.asarray(citations, dtype=float)
    journals = np.asarray(journals, dtype=np.int64)
    params = ModelParams(
        n=len(values), m=m, sigma_v2=0.0, sigma_c2=0.0, sigma_r2=0.0, seed=0
    )
    return SimulationOutcome(
        params=params,
        values=values,
        citations=citations,
        journals=journals,
        impact_factors=compute_impact_factors(citations, journals, m),
    )


class TestTopK:
    def test_hand_sort(self):
        assert set(top_k_indices([3, 1, 2], 2)) == {0, 2}

    def test_pure_tie_break(self):
        assert set(top_k_indices([7.0, 7.0, 7.0], 2)) == {0, 1}

    def test_matches_brute_force_full_sort(self):
        gen = np.random.default_rng(77)
        scores = gen.permutation(100).astype(float)
        oracle = sorted(range(100), key=lambda i: (-scores[i], i))[:10]
        assert set(top_k_indices(scores, 10)) == set(oracle)

    @pytest.mark.parametrize("k", [0, 4])
    def test_k_out_of_range(self, k):
        with pytest.raises(ValueError):
            top_k_indices([1.0, 2.0, 3.0], k)

    def test_result_keyed_by_id_not_storage_order(self):
        scores = np.array([5.0, 9.0, 1.0, 7.0])
        assert set(top_k_indices(scores, 2)) == {1, 3}


class TestHighValueSet:
    def test_size_at_alpha_point_one(self):
        values = np.random.default_rng(0).lognormal(size=2000)
        assert high_value_set(values, AccuracySpec(0.1)).size == 200

    def test_increasing_values(self):
        assert set(high_value_set([1.0, 2.0, 3.0, 4.0], AccuracySpec(0.5))) == {2, 3}

    def test_duplicate_maxima_lowest_ids_win(self):
        selected = high_value_set([9.0, 9.0, 9.0, 1.0], AccuracySpec(0.5))
        assert set(selected) == {0, 1}

    def test_round_half_up(self):
        # alpha * n = 0.5 rounds up to one article
        assert high_value_set([1.0, 2.0, 3.0, 4.0, 5.0], AccuracySpec(0.1)).size == 1

    def test_zero_selection_rejected(self):
        with pytest.raises(ValueError):
            high_value_set([1.0, 2.0, 3.0, 4.0], AccuracySpec(0.1))

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.5])
    def test_alpha_domain(self, alpha):
        with pytest.raises(ValueError):
            AccuracySpec(alpha)


class TestSelectionAccuracy:
    def test_perfect_indicator(self):
        values = np.random.default_rng(1).lognormal(size=100)
        assert selection_accuracy(values, values, AccuracySpec(0.1)) == 100.0

    def test_anti_indicator(self):
        values = np.arange(1.0, 101.0)
        assert selection_accuracy(-values, values, AccuracySpec(0.3)) == 0.0

    def test_journal_score_hand_case(self):
        values = [5.0, 1.0, 3.0, 2.0]
        scores = [3.0, 3.0, 2.5, 2.5]  # journal-level scores; top 2 by tie rule = {0, 1}
        assert selection_accuracy(scores, values, AccuracySpec(0.5)) == 50.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            selection_accuracy([1.0, 2.0], [1.0, 2.0, 3.0], AccuracySpec(0.5))

    def test_invariant_under_positive_affine_rescaling(self):
        gen = np.random.default_rng(2)
        for _ in range(20):
            values = gen.lognormal(size=50)
            scores = gen.normal(size=50)
            spec = AccuracySpec(0.2)
            base = selection_accuracy(scores, values, spec)
            assert selection_accuracy(3.7 * scores, values, spec) == base
            assert selection_accuracy(scores + 11.0, values, spec) == base

    def test_selected_set_size_exact_under_massive_ties(self):
        scores = np.ones(40)
        values = np.ones(40)
        assert selection_accuracy(scores, values, AccuracySpec(0.25)) == 100.0


class TestIndicatorScores:
    def test_citation_scores_are_citations(self):
        outcome = make_outcome([5, 1, 3, 2], [4, 2, 3, 1], [1, 2, 1, 2], 2)
        assert np.array_equal(citation_scores(outcome), outcome.citations)

    def test_if_scores_shared_within_journal(self):
        outcome = make_outcome([5, 1, 3, 2], [5, 1, 3, 2], [1, 1, 2, 2], 2)
        assert np.array_equal(if_scores(outcome), [3.0, 3.0, 2.5, 2.5])

    def test_single_journal_all_scores_equal(self):
        outcome = make_outcome([5, 1, 3, 2], [4, 2, 3, 1], [1, 1, 1, 1], 1)
        assert np.all(if_scores(outcome) == if_scores(outcome)[0])

    def test_one_article_journals_if_equals_citations(self):
        outcome = run_simulation(
            ModelParams(n=100, m=100, sigma_v2=0.65, sigma_c2=0.65, sigma_r2=0.4, seed=9)
        )
        assert np.array_equal(if_scores(outcome), citation_scores(outcome))
        spec = AccuracySpec(0.1)
        assert selection_accuracy(if_scores(outcome), outcome.values, spec) == selection_accuracy(
            citation_scores(outcome), outcome.values, spec
        )

    def test_noiseless_citations_perfect(self):
        outcome = run_simulation(
            ModelParams(n=200, m=20, sigma_v2=1.3, sigma_c2=0.0, sigma_r2=0.4, seed=3)
        )
        assert selection_accuracy(citation_scores(outcome), outcome.values, AccuracySpec(0.1)) == 100.0


class TestHybridScores:
    @pytest.fixture
    def outcome(self):
        return run_simulation(
            ModelParams(n=200, m=10, sigma_v2=0.65, sigma_c2=0.65, sigma_r2=0.4, seed=17)
        )

    def test_weight_zero_is_citations(self, outcome):
        assert np.array_equal(hybrid_scores(outcome, 0.0), citation_scores(outcome))

    def test_weight_one_is_if(self, outcome):
        assert np.array_equal(hybrid_scores(outcome, 1.0), if_scores(outcome))

    def test_midpoint(self):
        # journal citations {4, 0} give IF = 2; article 0 has citations 4
        outcome = make_outcome([1, 1], [4.0, 0.0], [1, 1], 1)
        assert hybrid_scores(outcome, 0.5)[0] == 3.0

    @pytest.mark.parametrize("weight", [-0.1, 1.1])
    def test_weight_domain(self, outcome, weight):
        with pytest.raises(ValueError):
            hybrid_scores(outcome, weight)

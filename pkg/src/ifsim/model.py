"""One full run of the publishing model.

Articles draw a latent value, cascade through journals in descending
prestige order (each journal accepts the articles its noisy reviews rank
highest), then accumulate citations proportional to value times noise.
Journal impact factors are the per-journal mean citation counts.

Draw-order contract (normative; "same seed" is meaningless without it):
  1. article values, ascending article id;
  2. review noise, journal by journal, within a journal ascending id
     over the articles that journal receives;
  3. citation noise, ascending article id.
All draws come from the single generator owned by the run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import RngState, sample_lognormal_unit_mean

_MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class ModelParams:
    """Parameters of one simulated field of journals.

    ``sigma_v2`` spreads article values, ``sigma_r2`` blurs peer-review
    estimates, ``sigma_c2`` blurs citations; all are log-variances of
    unit-mean lognormal factors.
    """

    n: int
    m: int
    sigma_v2: float
    sigma_c2: float
    sigma_r2: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n % self.m != 0:
            raise ValueError(
                f"m must divide n exactly (equal journal sizes): n={self.n}, m={self.m}"
            )
        for name in ("sigma_v2", "sigma_c2", "sigma_r2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if not 0 <= self.seed <= _MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @property
    def articles_per_journal(self) -> int:
        return self.n // self.m


@dataclass(frozen=True)
class Article:
    """One simulated article. ``journal`` is 1-based, 1 = most prestigious."""

    id: int
    value: float
    citations: float
    journal: int


@dataclass(frozen=True)
class SimulationOutcome:
    """Result of one run, stored as id-indexed arrays.

    ``journals[i]`` is the 1-based journal of article ``i``;
    ``impact_factors[k - 1]`` is the mean citation count of journal ``k``.
    """

    params: ModelParams
    values: np.ndarray
    citations: np.ndarray
    journals: np.ndarray
    impact_factors: np.ndarray

    @property
    def articles(self) -> list[Article]:
        return [
            Article(i, float(self.values[i]), float(self.citations[i]), int(self.journals[i]))
            for i in range(self.params.n)
        ]


def sample_values(params: ModelParams, rng: RngState) -> np.ndarray:
    """Independent unit-mean lognormal values, one per article, ascending id."""
    return np.atleast_1d(sample_lognormal_unit_mean(params.sigma_v2, rng, size=params.n))


def assign_journals(values: np.ndarray, params: ModelParams, rng: RngState) -> np.ndarray:
    """Route every article through the prestige-ordered submission cascade.

    Journal k receives all articles not yet accepted, forms a fresh noisy
    estimate of each one's value (new noise per article per journal, so a
    rejection at one journal says nothing about the next), and accepts the
    n/m highest estimates. The last journal accepts everything it receives.
    Estimate ties go to the lower article id. Estimates are transient and
    not part of the outcome.
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (params.n,):
        raise ValueError(f"expected {params.n} values, got shape {values.shape}")
    per_journal = params.articles_per_journal
    journals = np.zeros(params.n, dtype=np.int64)
    remaining = np.arange(params.n)  # always in ascending id order
    for k in range(1, params.m + 1):
        if k == params.m:
            journals[remaining] = k
            break
        noise = sample_lognormal_unit_mean(params.sigma_r2, rng, size=remaining.size)
        estimates = values[remaining] * noise
        # stable sort on the negated estimates: descending estimate,
        # ties resolved in favor of the lower (earlier) article id
        order = np.argsort(-estimates, kind="stable")
        accepted = order[:per_journal]
        journals[remaining[accepted]] = k
        keep = np.ones(remaining.size, dtype=bool)
        keep[accepted] = False
        remaining = remaining[keep]
    return journals


def sample_citations(values: np.ndarray, params: ModelParams, rng: RngState) -> np.ndarray:
    """Citations: value times an independent unit-mean lognormal factor.

    Citation counts stay real-valued; they are not rounded to integers.
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (params.n,):
        raise ValueError(f"expected {params.n} values, got shape {values.shape}")
    noise = np.atleast_1d(sample_lognormal_unit_mean(params.sigma_c2, rng, size=params.n))
    return values * noise


def compute_impact_factors(citations: np.ndarray, journals: np.ndarray, m: int) -> np.ndarray:
    """Mean citation count per journal, summed in ascending article id order."""
    journals = np.asarray(journals)
    counts = np.bincount(journals - 1, minlength=m)
    if np.any(counts == 0):
        empty = int(np.argmin(counts)) + 1
        raise RuntimeError(f"internal invariant violated: journal {empty} is empty")
    totals = np.bincount(journals - 1, weights=np.asarray(citations, dtype=float), minlength=m)
    return totals / counts


def run_simulation(params: ModelParams) -> SimulationOutcome:
    """Execute one full run from ``params.seed``: values, cascade, citations, IFs."""
    rng = RngState.from_seed(params.seed)
    values = sample_values(params, rng)
    journals = assign_journals(values, params, rng)
    citations = sample_citations(values, params, rng)
    impact_factors = compute_impact_factors(citations, journals, params.m)
    return SimulationOutcome(
        params=params,
        values=values,
        citations=citations,
        journals=journals,
        impact_factors=impact_factors,
    )

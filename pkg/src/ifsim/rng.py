"""Deterministic random number generation.

All randomness in the package flows through :class:`RngState`, a thin wrapper
around numpy's PCG64 bit generator. Standard normal variates are produced by
numpy's ziggurat method; lognormal variates are ``exp(mu + sigma * z)`` on top
of those normals. Substream seeds are derived with the splitmix64 finalizer,
so the state for run ``r`` is a pure function of ``(master_seed, r)`` and can
be constructed without generating any earlier stream.

Reproducibility is bit-exact for a fixed numpy version; it is not a
cross-library contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    """splitmix64 finalizer: a bijective 64-bit avalanche mix."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """64-bit substream seed for ``index`` under ``master_seed``.

    Pure function of its inputs: mix both halves independently, combine,
    and mix again. Distinct indices under one master seed give unrelated
    PCG64 states.
    """
    if index < 0:
        raise ValueError("substream index must be non-negative")
    return _mix64((_mix64(master_seed) + _mix64(index ^ _GOLDEN)) & _MASK64)


@dataclass
class RngState:
    """Single-owner deterministic generator state.

    Never share one state between parallel workers; derive one substream
    per work unit instead.
    """

    generator: np.random.Generator

    @classmethod
    def from_seed(cls, seed: int) -> "RngState":
        return cls(np.random.Generator(np.random.PCG64(seed & _MASK64)))


def derive_substream(master_seed: int, run_index: int) -> RngState:
    """Independent generator state for one (master_seed, run_index) pair."""
    return RngState.from_seed(derive_seed(master_seed, run_index))


def sample_standard_normal(rng: RngState, size: int | None = None):
    """Draw from N(0, 1) via numpy's ziggurat method.

    With ``size`` given, returns an array filled in ascending index order
    from a single sequential pass over the underlying bit stream.
    """
    if size is None:
        return float(rng.generator.standard_normal())
    return rng.generator.standard_normal(size)


def sample_lognormal_unit_mean(sigma2: float, rng: RngState, size: int | None = None):
    """Draw exp(x) with x ~ N(-sigma2/2, sigma2); the mean is exactly 1.

    ``sigma2 = 0`` degenerates to the constant 1 but still consumes the
    same number of normal draws, keeping stream advancement uniform
    across parameter values.
    """
    if sigma2 < 0:
        raise ValueError(f"sigma2 must be non-negative, got {sigma2}")
    z = sample_standard_normal(rng, size)
    return np.exp(-0.5 * sigma2 + np.sqrt(sigma2) * z)

"""Seeded synthetic technology trajectories.

Ground-truth generator for exercising every estimator: pick logistic
parameters, sample both curves on a uniform time grid, optionally multiply
by log-normal noise.  Identical specs produce bit-identical pairs on any
platform, because the random stream is pinned exactly:

RNG contract (language-independent)
-----------------------------------
* State: one 64-bit unsigned integer, initialized to the seed.
* next_u64 (SplitMix64)::

      state = (state + 0x9E3779B97F4A7C15) mod 2**64
      z = state
      z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
      z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
      return z ^ (z >> 31)

* uniform in (0, 1]: ``((next_u64() >> 11) + 1) * 2**-53``
* standard normal (Box-Muller, cosine branch only, two uniforms per
  deviate): ``sqrt(-2 ln u1) * cos(2 pi u2)``

``generate_pair`` draws the host's deviates first, then the subsystem's.
Deviates are clamped to [-5, 5] so generated values always stay inside
(0, k * exp(5 * noise_sigma)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyEarlyPhase
from .logistic import LogisticParams, logistic_value
from .series import AlignedPair, FmtSeries

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Counter-based 64-bit generator with Box-Muller normals."""

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed {seed!r} outside [0, 2**64)")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform deviate in (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * 2.0 ** -53

    def normal(self) -> float:
        """Standard normal deviate; consumes exactly two uniforms."""
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


@dataclass(frozen=True)
class SyntheticSpec:
    """Everything needed to reproduce one synthetic pair exactly."""

    host_params: LogisticParams
    sub_params: LogisticParams
    t_start: float
    t_end: float
    n_points: int
    noise_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.t_start < self.t_end:
            raise ValueError(
                f"t_start {self.t_start!r} must precede t_end {self.t_end!r}"
            )
        if self.n_points < 3:
            raise ValueError(f"n_points must be >= 3, got {self.n_points!r}")
        if self.noise_sigma < 0.0:
            raise ValueError(f"noise_sigma must be >= 0, got {self.noise_sigma!r}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"seed {self.seed!r} outside [0, 2**64)")


def _noisy_values(
    params: LogisticParams, ts: list[float], sigma: float, rng: SplitMix64
) -> list[float]:
    values = [logistic_value(params, t) for t in ts]
    if sigma == 0.0:
        return values
    out = []
    for v in values:
        z = max(-5.0, min(5.0, rng.normal()))
        out.append(v * math.exp(sigma * z))
    return out


def generate_pair(spec: SyntheticSpec) -> AlignedPair:
    """Sample both curves on a uniform grid with optional log-normal noise."""
    n = spec.n_points
    dt = (spec.t_end - spec.t_start) / (n - 1)
    ts = [spec.t_start + i * dt for i in range(n)]
    rng = SplitMix64(spec.seed)
    host_vals = _noisy_values(spec.host_params, ts, spec.noise_sigma, rng)
    sub_vals = _noisy_values(spec.sub_params, ts, spec.noise_sigma, rng)
    host = FmtSeries(
        name="synthetic-host",
        points=tuple(zip(ts, host_vals)),
        unit="synthetic",
    )
    sub = FmtSeries(
        name="synthetic-sub",
        points=tuple(zip(ts, sub_vals)),
        unit="synthetic",
    )
    rows = tuple(zip(ts, host_vals, sub_vals))
    return AlignedPair(host=host, sub=sub, rows=rows)


def early_phase_pair(spec: SyntheticSpec, cap_fraction: float) -> AlignedPair:
    """Noise-free pair truncated to rows where both values are at or below
    ``cap_fraction`` of their saturation level.

    In this regime both curves are still near-exponential, so the log-log
    slope of the pair approaches the growth-rate ratio b2/b1.
    """
    if spec.noise_sigma != 0.0:
        raise ValueError("early-phase truncation requires noise_sigma = 0")
    if not 0.0 < cap_fraction < 1.0:
        raise ValueError(f"cap_fraction {cap_fraction!r} outside (0, 1)")
    full = generate_pair(spec)
    h_cap = cap_fraction * spec.host_params.k
    p_cap = cap_fraction * spec.sub_params.k
    rows = tuple((t, h, p) for t, h, p in full.rows if h <= h_cap and p <= p_cap)
    if len(rows) < 3:
        raise EmptyEarlyPhase(
            f"{len(rows)} rows at or below {cap_fraction!r} of saturation; need >= 3"
        )
    host = FmtSeries(
        name=full.host.name,
        points=tuple((t, h) for t, h, _ in rows),
        unit=full.host.unit,
    )
    sub = FmtSeries(
        name=full.sub.name,
        points=tuple((t, p) for t, _, p in rows),
        unit=full.sub.unit,
    )
    return AlignedPair(host=host, sub=sub, rows=rows)

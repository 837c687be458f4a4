"""Monte Carlo estimation of maximum bin loads, with exact small-case baselines.

Each sample draws its randomness from a counter-based substream keyed by
(seed, sample index), so estimates do not depend on evaluation order and any
chunked or parallel schedule reproduces the sequential result bit for bit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import Modulus, next_prime_at_least
from .loads import Interval, KeySet, materialize

# Algorithm name recorded in output metadata alongside every estimate.
GENERATOR_NAME = "philox4x64"

# The exact dynamic program below is only intended for calibration scale.
MAX_EXACT_BINS = 64


@dataclass(frozen=True)
class McConfig:
    """Inputs of one Monte Carlo max-load run over the linear hash family."""

    samples: int
    seed: int
    mod: Modulus
    key_set: KeySet

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class McEstimate:
    """Mean, normal-approximation standard error, and tail of sampled max loads.

    tail maps each threshold l in [1, max observed] to the empirical
    Pr[max_load >= l]; the mean equals the sum of the tail values.
    """

    mean: float
    std_error: float
    tail: dict[int, float]
    samples: int
    seed: int


def _sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent substream for one sample, derived only from (seed, index)."""
    return np.random.Generator(np.random.Philox(key=[seed, index]))


def _summarize(maxima: np.ndarray, seed: int) -> McEstimate:
    n = len(maxima)
    mean = float(maxima.mean())
    std_error = float(maxima.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    counts = np.bincount(maxima)
    above = counts[::-1].cumsum()[::-1]
    tail = {l: float(above[l]) / n for l in range(1, len(counts))}
    return McEstimate(mean=mean, std_error=std_error, tail=tail, samples=n, seed=seed)


def mc_linear_maxload(cfg: McConfig) -> McEstimate:
    """Estimate the expected max load under (a, b) drawn uniformly from [p]^2."""
    p, m = cfg.mod.p, cfg.mod.m
    if p < m * m:
        warnings.warn(
            f"p={p} is below m^2={m * m}; the constant-max-load claim assumes p >= m^2",
            stacklevel=2,
        )
    s = np.asarray(materialize(cfg.key_set, cfg.mod), dtype=np.int64)
    maxima = np.empty(cfg.samples, dtype=np.int64)
    for i in range(cfg.samples):
        rng = _sample_rng(cfg.seed, i)
        a, b = rng.integers(0, p, size=2)
        bins = (int(a) * s + int(b)) % p % m
        maxima[i] = np.bincount(bins, minlength=m).max()
    return _summarize(maxima, cfg.seed)


def mc_fully_random_maxload(m: int, balls: int, samples: int, seed: int) -> McEstimate:
    """Estimate the expected max load of `balls` uniform throws into m bins."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if balls < 1:
        raise ValueError(f"balls must be >= 1, got {balls}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    maxima = np.empty(samples, dtype=np.int64)
    for i in range(samples):
        rng = _sample_rng(seed, i)
        throws = rng.integers(0, m, size=balls)
        maxima[i] = np.bincount(throws, minlength=m).max()
    return _summarize(maxima, seed)


def max_load_distribution(m: int, balls: int) -> dict[int, Fraction]:
    """Exact max-load distribution for uniform throws, by dynamic programming.

    Counts assignments whose bins all hold at most t balls via
    W(i, r) = sum_k C(r, k) * W(i-1, r-k), then differences the CDF.
    Intended for calibration only, hence the small-m guard.
    """
    if not 1 <= m <= MAX_EXACT_BINS:
        raise ValueError(f"m must be in [1, {MAX_EXACT_BINS}], got {m}")
    if balls < 1:
        raise ValueError(f"balls must be >= 1, got {balls}")
    total = m**balls
    dist: dict[int, Fraction] = {}
    prev = Fraction(0)
    for t in range(1, balls + 1):
        w = [1] + [0] * balls
        for _ in range(m):
            w = [
                sum(math.comb(r, k) * w[r - k] for k in range(min(r, t) + 1))
                for r in range(balls + 1)
            ]
        at_most_t = Fraction(w[balls], total)
        if at_most_t > prev:
            dist[t] = at_most_t - prev
        prev = at_most_t
        if at_most_t == 1:
            break
    return dist


def fully_random_exact_mean(m: int, balls: int) -> Fraction:
    """Exact expected max load of uniform throws, from the distribution."""
    return sum((t * pr for t, pr in max_load_distribution(m, balls).items()), Fraction(0))


@dataclass(frozen=True)
class ScalingRow:
    """One bin count in the scaling study: linear-hash vs fully random."""

    m: int
    p: int
    linear: McEstimate
    random: McEstimate


def scaling_study(m_values: list[int], samples: int, seed: int) -> list[ScalingRow]:
    """Compare E[max load] of the linear family on [m] against uniform throws.

    For each m the prime is the next prime at or above m^2 and the two
    estimators get disjoint seeds derived from the base seed.
    """
    rows = []
    for k, m in enumerate(m_values):
        if m < 2:
            raise ValueError(f"scaling study needs m >= 2, got {m}")
        p = next_prime_at_least(m * m)
        cfg = McConfig(samples=samples, seed=seed + 2 * k, mod=Modulus(p, m), key_set=Interval(m))
        linear = mc_linear_maxload(cfg)
        random = mc_fully_random_maxload(m, m, samples, seed + 2 * k + 1)
        rows.append(ScalingRow(m=m, p=p, linear=linear, random=random))
    return rows


def tail_log_slope(
    tail: dict[int, float], samples: int, lo: int = 3, hi: int = 10
) -> float | None:
    """Least-squares slope of log Pr[max >= l] against log l over [lo, hi].

    Thresholds whose empirical tail falls below 10/samples are excluded as
    too noisy; returns None when fewer than two points remain.
    """
    points = [
        (l, tail[l]) for l in range(lo, hi + 1) if tail.get(l, 0.0) >= 10 / samples
    ]
    if len(points) < 2:
        return None
    xs = np.log([l for l, _ in points])
    ys = np.log([t for _, t in points])
    return float(np.polyfit(xs, ys, 1)[0])

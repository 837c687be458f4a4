"""Exact collision counting over all (a, b) parameter pairs.

Every count here is an exact enumeration result over the p^2 parameter pairs.
The enumeration is a-major: for a fixed multiplier a, the full value of
element x is (v_x + b) mod p with v_x = a*x mod p, which wraps exactly once
as b sweeps [0, p), at b = p - v_x.  Between consecutive wrap points the
collision/mapping conditions do not depend on b (only residues mod m do), so
the inner loop over b collapses to a handful of whole segments per a.  The
resulting counts are identical to the literal double loop, which the test
suite keeps as an independent reference.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import MAX_MODULUS, Modulus, mod_inverse
from .loads import KeySet, materialize

# Refuse exhaustive calls whose notional cost (hash evaluations of the
# literal enumeration) exceeds this, unless the caller raises the budget.
DEFAULT_WORK_BUDGET = 2**33

# Below this notional cost a worker pool costs more than it saves.
_MIN_PARALLEL_WORK = 2**26


class WorkBudgetError(Exception):
    """Raised when an exhaustive call would exceed its work budget."""


def _check_budget(notional: int, budget: int | None, what: str) -> None:
    limit = DEFAULT_WORK_BUDGET if budget is None else budget
    if notional > limit:
        raise WorkBudgetError(
            f"{what} needs {notional} notional hash evaluations, over the "
            f"budget of {limit}; reduce p or raise the budget"
        )


def _chunk_bounds(p: int, workers: int) -> list[tuple[int, int]]:
    w = max(1, min(workers, p))
    bounds = [p * i // w for i in range(w + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def _map_chunks(func, p: int, workers: int, notional: int, args: tuple) -> list:
    """Apply func(*args, lo_a, hi_a) over a partition of [0, p)."""
    if notional < _MIN_PARALLEL_WORK:
        workers = 1
    chunks = _chunk_bounds(p, workers)
    if len(chunks) == 1:
        return [func(*args, *chunks[0])]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(func, *args, lo, hi) for lo, hi in chunks]
        return [f.result() for f in futures]


@dataclass(frozen=True)
class CollisionStats:
    """Exact count of (a, b) pairs satisfying a collision event."""

    satisfying_pairs: int
    total_pairs: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.satisfying_pairs, self.total_pairs)


@dataclass(frozen=True)
class CanonicalTriple:
    """Reduction of a distinct triple (x, y, z) to (0, 1, d).

    The affine map t -> (alpha*t + beta) mod p with alpha = y - x, beta = x
    sends (0, 1, d) to (x, y, z); composing it with the hash family permutes
    the parameter pairs, so every joint-mapping count for (x, y, z) equals
    the count for (0, 1, d).
    """

    d: int
    alpha: int
    beta: int


def canonicalize_triple(p: int, x: int, y: int, z: int) -> CanonicalTriple:
    """Canonical (0, 1, d) form of a distinct triple; d is never 0 or 1."""
    if len({x % p, y % p, z % p}) != 3:
        raise ValueError(f"triple ({x}, {y}, {z}) is not distinct mod {p}")
    alpha = (y - x) % p
    beta = x % p
    d = mod_inverse(alpha, p) * (z - beta) % p
    return CanonicalTriple(d=d, alpha=alpha, beta=beta)


def _require_enumerable(p: int) -> None:
    if p > MAX_MODULUS:
        raise ValueError(f"p={p} exceeds the enumerable range ({MAX_MODULUS})")


def _segments(p, cx, cy, cz):
    """Wrap-point segmentation of the b axis, per a (vectorized over a)."""
    s1 = np.minimum(np.minimum(cx, cy), cz)
    s3 = np.maximum(np.maximum(cx, cy), cz)
    s2 = cx + cy + cz - s1 - s3
    zero = np.zeros_like(cx)
    full = np.full_like(cx, p)
    return [(zero, s1), (s1, s2), (s2, s3), (s3, full)]


def _triple_chunk(p, m, x, y, z, lo_a, hi_a):
    a = np.arange(lo_a, hi_a, dtype=np.int64)
    vx, vy, vz = a * x % p, a * y % p, a * z % p
    cx, cy, cz = p - vx, p - vy, p - vz
    total = 0
    for lo, hi in _segments(p, cx, cy, cz):
        dx = (cx <= lo).astype(np.int64)
        dy = (cy <= lo).astype(np.int64)
        dz = (cz <= lo).astype(np.int64)
        ok = ((vy - vx - p * (dy - dx)) % m == 0) & ((vz - vx - p * (dz - dx)) % m == 0)
        total += int(((hi - lo) * ok).sum())
    return total


def count_triple_collisions(
    mod: Modulus,
    x: int,
    y: int,
    z: int,
    workers: int = 1,
    budget: int | None = None,
) -> CollisionStats:
    """Exact number of (a, b) pairs mapping x, y, z all to one bin."""
    p, m = mod.p, mod.m
    _require_enumerable(p)
    if len({x, y, z}) != 3 or not all(0 <= t < p for t in (x, y, z)):
        raise ValueError(f"elements must be distinct and in [0, {p})")
    notional = 3 * p * p
    _check_budget(notional, budget, "triple collision count")
    parts = _map_chunks(_triple_chunk, p, workers, notional, (p, m, x, y, z))
    return CollisionStats(sum(parts), p * p)


def _prescribed_chunk(p, m, x, y, z, ix, iy, iz, lo_a, hi_a):
    a = np.arange(lo_a, hi_a, dtype=np.int64)
    vx, vy, vz = a * x % p, a * y % p, a * z % p
    cx, cy, cz = p - vx, p - vy, p - vz
    total = 0
    for lo, hi in _segments(p, cx, cy, cz):
        dx = (cx <= lo).astype(np.int64)
        dy = (cy <= lo).astype(np.int64)
        dz = (cz <= lo).astype(np.int64)
        # Within a segment, h(x) = ix pins b to one residue class mod m.
        rx = (ix - vx + p * dx) % m
        ry = (iy - vy + p * dy) % m
        rz = (iz - vz + p * dz) % m
        same = (rx == ry) & (ry == rz)
        in_class = (hi - rx + m - 1) // m - (lo - rx + m - 1) // m
        total += int(np.where(same, in_class, 0).sum())
    return total


def count_prescribed_triple(
    mod: Modulus,
    x: int,
    y: int,
    z: int,
    ix: int,
    iy: int,
    iz: int,
    workers: int = 1,
    budget: int | None = None,
) -> CollisionStats:
    """Exact number of (a, b) pairs with h(x) = ix, h(y) = iy, h(z) = iz."""
    p, m = mod.p, mod.m
    _require_enumerable(p)
    if len({x, y, z}) != 3 or not all(0 <= t < p for t in (x, y, z)):
        raise ValueError(f"elements must be distinct and in [0, {p})")
    if not all(0 <= i < m for i in (ix, iy, iz)):
        raise ValueError(f"bin targets must lie in [0, {m})")
    notional = 3 * p * p
    _check_budget(notional, budget, "prescribed triple count")
    parts = _map_chunks(
        _prescribed_chunk, p, workers, notional, (p, m, x, y, z, ix, iy, iz)
    )
    return CollisionStats(sum(parts), p * p)


def _interval_chunk(p, m, d, lo_a, hi_a):
    a = np.arange(lo_a, hi_a, dtype=np.int64)
    # Valid b values for "h(t) = h(0)" form one interval per element t (for
    # 1 < m <= p the prefix and suffix cases exclude each other since m does
    # not divide p); the whole interval [d] collides on the intersection.
    lo = np.zeros_like(a)
    hi = np.full_like(a, p)
    for t in range(1, d):
        vt = a * t % p
        ct = p - vt
        pre = vt % m == 0
        suf = (vt - p) % m == 0
        hi = np.where(pre, np.minimum(hi, ct), hi)
        lo = np.where(~pre & suf, np.maximum(lo, ct), lo)
        dead = ~pre & ~suf
        hi = np.where(dead, 0, hi)
        lo = np.where(dead, 0, lo)
    return int(np.maximum(0, hi - lo).sum())


def count_interval_collision(
    mod: Modulus, d: int, workers: int = 1, budget: int | None = None
) -> CollisionStats:
    """Exact number of (a, b) pairs mapping all of {0, ..., d-1} to one bin."""
    p, m = mod.p, mod.m
    _require_enumerable(p)
    if not 2 <= d <= p:
        raise ValueError(f"d must satisfy 2 <= d <= p, got {d}")
    if m == 1:
        # One bin: prefix and suffix cases coincide and every (a, b) collides.
        return CollisionStats(p * p, p * p)
    notional = d * p * p
    _check_budget(notional, budget, "interval collision count")
    parts = _map_chunks(_interval_chunk, p, workers, notional, (p, m, d))
    return CollisionStats(sum(parts), p * p)


@dataclass(frozen=True)
class TripleCollisionBounds:
    """Candidate upper bounds on the collision probability of {0, 1, d}.

    statement: (1 + max(1, p/(d*m)) * (1 + d/m)) / p
    proof:     (1 + (1 + p/d)/m) * (1 + d/m) / p
    ceiling:   (1 + ceil(ceil(p/d)/m)) * (1 + ceil(d/m)) / p

    The statement and proof forms differ and neither is proved tight here;
    experiments compare each against the exhaustive count and report which
    ones hold.  The ceiling form keeps the interval-counting integers intact
    instead of smoothing them.
    """

    statement: Fraction
    proof: Fraction
    ceiling: Fraction


def triple_bound_formula(mod: Modulus, d: int) -> TripleCollisionBounds:
    """All candidate bound values for the collision probability of {0, 1, d}."""
    p, m = mod.p, mod.m
    if not 2 <= d < p:
        raise ValueError(f"d must satisfy 2 <= d < p, got {d}")
    statement = (1 + max(Fraction(1), Fraction(p, d * m)) * (1 + Fraction(d, m))) / p
    proof = (1 + (1 + Fraction(p, d)) / m) * (1 + Fraction(d, m)) / Fraction(p)
    per_l = 1 + math.ceil(math.ceil(p / d) / m)
    valid_l = 1 + math.ceil(d / m)
    ceiling = Fraction(per_l * valid_l, p)
    return TripleCollisionBounds(statement=statement, proof=proof, ceiling=ceiling)


def interval_lower_bound(mod: Modulus, d: int) -> Fraction:
    """Guaranteed lower bound 1/(6*d*m) on the interval collision probability.

    Only claimed for d <= m under p > 3*m^2.
    """
    p, m = mod.p, mod.m
    if not 2 <= d <= m:
        raise ValueError(f"the bound requires 2 <= d <= m, got d={d}, m={m}")
    if p <= 3 * m * m:
        raise ValueError(f"the bound requires p > 3*m^2, got p={p}, m={m}")
    return Fraction(1, 6 * d * m)


# Cap on cells touched per array block in the load-scan helpers.
_BLOCK_CELLS = 1 << 22


def _maxloads_b_zero_chunk(p, m, elements, lo_a, hi_a):
    s = np.asarray(elements, dtype=np.int64)
    n = len(s)
    out = np.empty(hi_a - lo_a, dtype=np.int64)
    step = max(1, _BLOCK_CELLS // max(1, n))
    for blk in range(lo_a, hi_a, step):
        a = np.arange(blk, min(blk + step, hi_a), dtype=np.int64)
        bins = (a[:, None] * s[None, :] % p) % m
        codes = (np.arange(len(a))[:, None] * m + bins).ravel()
        counts = np.bincount(codes, minlength=len(a) * m).reshape(len(a), m)
        out[blk - lo_a : blk - lo_a + len(a)] = counts.max(axis=1)
    return out


def maxloads_b_zero(mod: Modulus, ks: KeySet, workers: int = 1) -> np.ndarray:
    """Max load of h_{a,0} on the key set, for every a in [p]."""
    p, m = mod.p, mod.m
    _require_enumerable(p)
    elements = materialize(ks, mod)
    parts = _map_chunks(
        _maxloads_b_zero_chunk, p, workers, p * len(elements), (p, m, elements)
    )
    return np.concatenate(parts)


def _maxloads_for_a_raw(p, m, elements, a):
    s = np.asarray(elements, dtype=np.int64)
    v = a * s % p
    out = np.empty(p, dtype=np.int64)
    step = max(1, _BLOCK_CELLS // max(1, len(s)))
    for blk in range(0, p, step):
        b = np.arange(blk, min(blk + step, p), dtype=np.int64)
        bins = (v[None, :] + b[:, None]) % p % m
        codes = (np.arange(len(b))[:, None] * m + bins).ravel()
        counts = np.bincount(codes, minlength=len(b) * m).reshape(len(b), m)
        out[blk : blk + len(b)] = counts.max(axis=1)
    return out


def maxloads_for_a(mod: Modulus, ks: KeySet, a: int) -> np.ndarray:
    """Max load of h_{a,b} on the key set, for every b in [p] at fixed a."""
    p = mod.p
    _require_enumerable(p)
    if not 0 <= a < p:
        raise ValueError(f"a={a} out of range for p={p}")
    return _maxloads_for_a_raw(p, mod.m, materialize(ks, mod), a)


def _maxload_hist_all_b_chunk(p, m, elements, lo_a, hi_a):
    n = len(elements)
    hist = np.zeros(n + 1, dtype=np.int64)
    for a in range(lo_a, hi_a):
        maxima = _maxloads_for_a_raw(p, m, elements, a)
        hist += np.bincount(maxima, minlength=n + 1)
    return hist


def exact_maxload_histogram(
    mod: Modulus,
    ks: KeySet,
    b_mode: str = "all_b",
    workers: int = 1,
    budget: int | None = None,
) -> dict[int, int]:
    """Histogram of the max load over every a (b_zero) or every (a, b) (all_b).

    Keys are max-load values, values are the number of parameter tuples
    attaining them; tail probabilities follow by suffix sums.
    """
    p, m = mod.p, mod.m
    _require_enumerable(p)
    elements = materialize(ks, mod)
    n = len(elements)
    if b_mode == "b_zero":
        _check_budget(p * n, budget, "b=0 max-load histogram")
        maxima = maxloads_b_zero(mod, ks, workers=workers)
        hist = np.bincount(maxima, minlength=n + 1)
    elif b_mode == "all_b":
        _check_budget(p * p * n, budget, "all-(a,b) max-load histogram")
        parts = _map_chunks(
            _maxload_hist_all_b_chunk, p, workers, p * p * n, (p, m, elements)
        )
        hist = sum(parts)
    else:
        raise ValueError(f"b_mode must be 'all_b' or 'b_zero', got {b_mode!r}")
    return {int(load): int(cnt) for load, cnt in enumerate(hist) if cnt > 0}

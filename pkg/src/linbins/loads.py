"""Key-set representations and per-bin load accounting for one hash function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .field import HashParams, Modulus, eval_binned


@dataclass(frozen=True)
class Interval:
    """The key set [length] = {0, ..., length-1}."""

    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("interval length must be >= 1")


@dataclass(frozen=True)
class AffineImage:
    """The key set {(alpha*x + beta) mod p : x in [length]} with alpha != 0."""

    length: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")


@dataclass(frozen=True)
class Explicit:
    """An explicit key set; elements must be distinct and are stored sorted."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        if len(elems) < 1:
            raise ValueError("key set must be non-empty")
        if len(set(elems)) != len(elems):
            raise ValueError("explicit key set contains duplicate elements")
        object.__setattr__(self, "elements", elems)


KeySet = Union[Interval, AffineImage, Explicit]


def materialize(ks: KeySet, mod: Modulus) -> list[int]:
    """Explicit element list of a key set; all elements distinct and in [p]."""
    p = mod.p
    if isinstance(ks, Interval):
        if ks.length > p:
            raise ValueError(f"interval length {ks.length} exceeds p={p}")
        return list(range(ks.length))
    if isinstance(ks, AffineImage):
        if ks.length > p:
            raise ValueError(f"length {ks.length} exceeds p={p}")
        alpha, beta = ks.alpha % p, ks.beta % p
        if alpha == 0:
            raise ValueError("alpha must be nonzero modulo p")
        return [(alpha * x + beta) % p for x in range(ks.length)]
    if isinstance(ks, Explicit):
        if any(not 0 <= e < p for e in ks.elements):
            raise ValueError(f"elements out of range for p={p}")
        return list(ks.elements)
    raise TypeError(f"not a key set: {ks!r}")


def key_set_size(ks: KeySet) -> int:
    if isinstance(ks, Explicit):
        return len(ks.elements)
    return ks.length


@dataclass(frozen=True)
class LoadProfile:
    """Per-bin occupancy for one hash function and key set."""

    loads: tuple
    max_load: int
    params: HashParams
    mod: Modulus


def load_profile(params: HashParams, mod: Modulus, ks: KeySet) -> LoadProfile:
    """Count how many key-set elements land in each of the m bins."""
    loads = [0] * mod.m
    for x in materialize(ks, mod):
        loads[eval_binned(params, mod, x)] += 1
    return LoadProfile(tuple(loads), max(loads), params, mod)


def max_load_b_zero_bounds(params: HashParams, mod: Modulus, ks: KeySet) -> tuple[int, int]:
    """Interval [floor(L/2), 2*L] that must contain the b=0 max load.

    L is the max load of the given (a, b); dropping b to 0 can at most split
    every bin in two or merge pairs of bins, so the b=0 max load stays within
    a factor of two.  The lower bound uses integer floor, the weakest integer
    reading of L/2.
    """
    full = load_profile(params, mod, ks).max_load
    return full // 2, 2 * full

"""Key sets and per-bin load profiles."""

from collections import Counter

import pytest

from linbins.field import HashParams, Modulus
from linbins.loads import (
    AffineImage,
    Explicit,
    Interval,
    key_set_size,
    load_profile,
    materialize,
    max_load_b_zero_bounds,
)


def test_materialize_interval():
    assert materialize(Interval(4), Modulus(13, 4)) == [0, 1, 2, 3]


def test_materialize_affine_image():
    assert materialize(AffineImage(3, 1, 0), Modulus(13, 3)) == [0, 1, 2]
    assert materialize(AffineImage(3, 5, 2), Modulus(13, 3)) == [2, 7, 12]


def test_materialize_explicit_sorted():
    ks = Explicit((5, 1, 3))
    assert materialize(ks, Modulus(13, 3)) == [1, 3, 5]


def test_explicit_rejects_duplicates():
    with pytest.raises(ValueError):
        Explicit((1, 2, 2))


def test_affine_image_rejects_zero_alpha():
    with pytest.raises(ValueError):
        AffineImage(3, 0, 2)


def test_key_set_size():
    assert key_set_size(Interval(7)) == 7
    assert key_set_size(AffineImage(5, 2, 1)) == 5
    assert key_set_size(Explicit((4, 9))) == 2


def test_load_profile_identity():
    mod = Modulus(13, 5)
    profile = load_profile(HashParams(1, 0), mod, Interval(5))
    assert profile.loads == (1, 1, 1, 1, 1)
    assert profile.max_load == 1


def test_load_profile_constant_function():
    mod = Modulus(13, 5)
    profile = load_profile(HashParams(0, 0), mod, Interval(5))
    assert profile.loads[0] == 5
    assert profile.max_load == 5


def test_load_profile_recount_oracle():
    # Independent per-element recount at (p, m, a, b) = (257, 16, 17, 0).
    mod = Modulus(257, 16)
    params = HashParams(17, 0)
    counter = Counter((17 * x) % 257 % 16 for x in range(16))
    profile = load_profile(params, mod, Interval(16))
    assert profile.max_load == max(counter.values())
    assert profile.loads == tuple(counter.get(i, 0) for i in range(16))


def test_load_sums_exhaustive_small_p():
    mod = Modulus(13, 3)
    for ks in (Interval(3), AffineImage(3, 5, 2), Explicit((1, 2, 7, 11))):
        size = key_set_size(ks)
        for a in range(13):
            for b in range(13):
                profile = load_profile(HashParams(a, b), mod, ks)
                assert sum(profile.loads) == size


def test_max_load_b_zero_bounds_arithmetic():
    # max load 5 at (a, b) -> the b=0 max load must land in [2, 10].
    mod = Modulus(13, 3)
    params = HashParams(0, 1)
    ks = Interval(5)
    full = load_profile(params, mod, ks).max_load
    assert full == 5
    assert max_load_b_zero_bounds(params, mod, ks) == (2, 10)

    params = HashParams(1, 0)
    ks = Interval(3)
    assert load_profile(params, mod, ks).max_load == 1
    assert max_load_b_zero_bounds(params, mod, ks) == (0, 2)

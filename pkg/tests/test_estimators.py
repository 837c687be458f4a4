"""Monte Carlo estimators and exact fully-random baselines."""

import math
import warnings
from fractions import Fraction

import pytest

from linbins.estimators import (
    McConfig,
    fully_random_exact_mean,
    max_load_distribution,
    mc_fully_random_maxload,
    mc_linear_maxload,
    scaling_study,
    tail_log_slope,
)
from linbins.field import Modulus
from linbins.loads import Interval
from linbins.oracles import exact_maxload_histogram


def test_mc_config_validation():
    mod = Modulus(257, 16)
    with pytest.raises(ValueError):
        McConfig(samples=0, seed=1, mod=mod, key_set=Interval(16))
    with pytest.raises(ValueError):
        McConfig(samples=10, seed=-1, mod=mod, key_set=Interval(16))


def test_single_bin_is_deterministic():
    cfg = McConfig(samples=50, seed=3, mod=Modulus(13, 1), key_set=Interval(5))
    est = mc_linear_maxload(cfg)
    assert est.mean == 5.0
    assert est.std_error == 0.0
    assert est.tail == {1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0, 5: 1.0}


def test_mc_linear_reproducible():
    cfg = McConfig(samples=2000, seed=42, mod=Modulus(257, 16), key_set=Interval(16))
    assert mc_linear_maxload(cfg) == mc_linear_maxload(cfg)


def test_mc_linear_seed_independence():
    mod = Modulus(257, 16)
    first = mc_linear_maxload(McConfig(samples=4000, seed=10, mod=mod, key_set=Interval(16)))
    second = mc_linear_maxload(McConfig(samples=4000, seed=11, mod=mod, key_set=Interval(16)))
    combined = math.hypot(first.std_error, second.std_error)
    assert abs(first.mean - second.mean) <= 6 * combined


def test_mc_tail_properties():
    cfg = McConfig(samples=3000, seed=5, mod=Modulus(257, 16), key_set=Interval(16))
    est = mc_linear_maxload(cfg)
    values = [est.tail[l] for l in sorted(est.tail)]
    assert sorted(est.tail) == list(range(1, max(est.tail) + 1))
    assert all(0.0 <= v <= 1.0 for v in values)
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert est.tail[1] <= 1.0
    # The mean of an integer-valued max load is the sum of its tail.
    assert abs(est.mean - sum(values)) < 1e-9


def test_mc_linear_warns_below_m_squared():
    cfg = McConfig(samples=5, seed=1, mod=Modulus(13, 5), key_set=Interval(5))
    with pytest.warns(UserWarning):
        mc_linear_maxload(cfg)


def test_mc_linear_no_warning_at_m_squared():
    cfg = McConfig(samples=5, seed=1, mod=Modulus(257, 16), key_set=Interval(16))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        mc_linear_maxload(cfg)


def test_fully_random_two_balls():
    est = mc_fully_random_maxload(2, 2, 4000, 9)
    assert abs(est.mean - 1.5) <= 3 * est.std_error
    est = mc_fully_random_maxload(2, 3, 4000, 9)
    assert abs(est.mean - 2.25) <= 3 * est.std_error


def test_fully_random_single_bin():
    est = mc_fully_random_maxload(1, 7, 100, 0)
    assert est.mean == 7.0
    assert est.std_error == 0.0


def test_fully_random_validation():
    with pytest.raises(ValueError):
        mc_fully_random_maxload(0, 3, 10, 0)
    with pytest.raises(ValueError):
        mc_fully_random_maxload(3, 0, 10, 0)
    with pytest.raises(ValueError):
        mc_fully_random_maxload(3, 3, 0, 0)


def test_max_load_distribution_small_cases():
    assert max_load_distribution(2, 2) == {1: Fraction(1, 2), 2: Fraction(1, 2)}
    assert max_load_distribution(2, 3) == {2: Fraction(3, 4), 3: Fraction(1, 4)}
    assert max_load_distribution(3, 3) == {
        1: Fraction(2, 9),
        2: Fraction(2, 3),
        3: Fraction(1, 9),
    }
    assert sum(max_load_distribution(5, 7).values()) == 1


def test_max_load_distribution_guards():
    with pytest.raises(ValueError):
        max_load_distribution(0, 3)
    with pytest.raises(ValueError):
        max_load_distribution(65, 3)
    with pytest.raises(ValueError):
        max_load_distribution(3, 0)


def test_fully_random_exact_mean_values():
    assert fully_random_exact_mean(2, 2) == Fraction(3, 2)
    assert fully_random_exact_mean(2, 3) == Fraction(9, 4)
    sixteen = fully_random_exact_mean(16, 16)
    assert sixteen == Fraction(221811058069429981, 72057594037927936)
    assert abs(float(fully_random_exact_mean(32, 32)) - 3.532940993) < 1e-8


def test_fully_random_calibrated_against_exact():
    for m in (4, 16):
        exact = float(fully_random_exact_mean(m, m))
        est = mc_fully_random_maxload(m, m, 20000, 17)
        assert abs(est.mean - exact) <= 4 * est.std_error, m


def test_linear_calibrated_against_exact_histogram():
    mod = Modulus(257, 16)
    hist = exact_maxload_histogram(mod, Interval(16), b_mode="all_b")
    total = sum(hist.values())
    exact = sum(load * count for load, count in hist.items()) / total
    est = mc_linear_maxload(McConfig(samples=20000, seed=7, mod=mod, key_set=Interval(16)))
    assert abs(est.mean - exact) <= 4 * est.std_error


def test_scaling_study_shape():
    rows = scaling_study([2, 4], samples=500, seed=99)
    assert [r.m for r in rows] == [2, 4]
    assert [r.p for r in rows] == [5, 17]
    for r in rows:
        assert 1.0 <= r.linear.mean <= r.m
        assert 1.0 <= r.random.mean <= r.m
        assert r.linear.samples == 500
    with pytest.raises(ValueError):
        scaling_study([1], samples=10, seed=0)


def test_tail_log_slope_recovers_quadratic_decay():
    tail = {l: l**-2.0 for l in range(1, 11)}
    slope = tail_log_slope(tail, samples=10**6)
    assert abs(slope + 2.0) < 1e-9
    assert tail_log_slope({1: 1.0, 2: 0.5}, samples=100) is None

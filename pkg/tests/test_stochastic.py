import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from kloospath.membership import Status, check_alpha_sequence
from kloospath.stochastic import (
    empirical_grid_size,
    empirical_vs_limit,
    kloosterman_sup_distances,
    mc_ball_probability,
    mc_ball_profile,
    sample_K,
    sample_sato_tate,
    sato_tate_cdf,
)


def test_cdf_is_the_semicircle_law():
    density = lambda x: np.sqrt(4 - x * x) / (2 * np.pi)  # noqa: E731
    for x in (-1.5, 0.0, 0.3, 1.9):
        assert abs(sato_tate_cdf(x) - integrate.quad(density, -2, x)[0]) < 1e-10
    assert sato_tate_cdf(-2) == 0 and sato_tate_cdf(2) == 1


def test_draws_in_range():
    x = sample_sato_tate(np.random.default_rng(0), 10_000)
    assert x.min() >= -2 and x.max() <= 2


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 200), st.integers(0, 2 ** 63 - 1))
def test_sample_paths(N, seed):
    s = sample_K(N, grid_size=257, seed=seed)
    assert s.values[0] == 0
    assert abs(s.values[-1] - s.st0) < 1e-12
    assert np.all(np.abs(s.st) <= 2)
    defect = np.max(np.abs(s.values + np.conj(s.values[::-1]) - s.values[-1]))
    assert defect <= 1e-9
    assert check_alpha_sequence(s.alphas(), s.st0, 0.0).status is Status.IN_S_ANALYTIC


def test_reproducible():
    a, b = sample_K(64, seed=5), sample_K(64, seed=5)
    assert np.array_equal(a.values, b.values) and np.array_equal(a.st, b.st)
    assert mc_ball_probability(None, 0.6, 32, 300, seed=3) == mc_ball_probability(None, 0.6, 32, 300, seed=3)


def test_trials_independent_of_batching():
    f1 = mc_ball_probability(None, 0.7, 32, 500, seed=9, batch=7)
    f2 = mc_ball_probability(None, 0.7, 32, 500, seed=9, batch=512)
    assert f1 == f2


def test_ball_examples():
    assert mc_ball_probability(None, 4.2, 1, 200, seed=1) == 1.0
    assert mc_ball_probability(None, 0.5, 128, 10_000, seed=7) > 0
    lo, hi = mc_ball_profile(None, [0.25, 0.5], 128, 2000, seed=7)
    assert lo <= hi
    assert mc_ball_probability(None, 0.25, 128, 2000, seed=7) <= mc_ball_probability(None, 0.5, 128, 2000, seed=7)
    with pytest.raises(ValueError):
        mc_ball_probability(None, 0.5, 8, 0)


def test_empirical_vs_limit_examples():
    r = empirical_vs_limit(13, 1, None, 5.0, trials=100)
    assert r.empirical == 1.0
    r = empirical_vs_limit(13, 1, lambda t: 2 * t, 5.0, trials=100)
    assert r.empirical == 1.0
    r = empirical_vs_limit(997, 1, None, 0.5, trials=200)
    assert 0 <= r.empirical <= 1 and 0 <= r.mc <= 1 and "b fixed" in r.note


def test_empirical_grid_holds_knots():
    for p in (5, 13, 997):
        g = empirical_grid_size(p)
        assert g >= max(1025, 4 * (p - 1) + 1) and (g - 1) % (p - 1) == 0


def test_sup_distances_at_knots():
    d = kloosterman_sup_distances(7, 1, None)
    assert d.shape == (6,) and np.all(d > 0)
    with pytest.raises(ValueError):
        kloosterman_sup_distances(9, 1, None)

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from netspect import graphs
from netspect.errors import InputError, ParameterError
from netspect.game import GameParams, PayoffSeries, hide_nodes, simulate
from netspect.spectral import dft_magnitudes, strength, strength_of_rows

from conftest import direct_dft_magnitudes


def _series(values):
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]
    return PayoffSeries(values, np.ones(n, bool), np.ones(n, bool))


def test_constant_signal():
    spec = dft_magnitudes([2.5] * 10)
    assert spec.magnitudes[0] == pytest.approx(25.0)
    assert np.allclose(spec.magnitudes[1:], 0.0, atol=1e-9)


def test_pure_tone_T8():
    x = np.cos(2 * np.pi * np.arange(8) / 8)
    mags = dft_magnitudes(x).magnitudes
    assert mags[1] == pytest.approx(4.0)
    assert mags[7] == pytest.approx(4.0)
    others = np.delete(mags, [1, 7])
    assert np.allclose(others, 0.0, atol=1e-9)


def test_rejects_short_input():
    with pytest.raises(ParameterError):
        dft_magnitudes([1.0])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 97), st.integers(0, 2 ** 31))
def test_direct_summation_oracle(T, seed):
    x = np.random.default_rng(seed).normal(size=T) * 10
    fast = dft_magnitudes(x).magnitudes
    direct = direct_dft_magnitudes(x)
    scale = max(direct.max(), 1.0)
    assert np.abs(fast - direct).max() / scale < 1e-9


def test_conjugate_symmetry():
    rng = np.random.default_rng(0)
    for T in (8, 9, 64, 101):
        mags = dft_magnitudes(rng.normal(size=T)).magnitudes
        for f in range(1, T):
            assert mags[f] == pytest.approx(mags[T - f], rel=1e-9, abs=1e-9)


def test_strength_constant_row_zero():
    # cumulative of zero payoffs is constant; DC is excluded
    sv = strength(_series(np.zeros((2, 50))))
    assert np.allclose(sv.S, 0.0)


def test_strength_linearity_ratio():
    rng = np.random.default_rng(3)
    y = rng.random(40)
    sv = strength(_series(np.vstack([y, 3 * y])), cumulative=False)
    assert sv.S[1] == pytest.approx(3 * sv.S[0])


@settings(max_examples=40, deadline=None)
@given(st.floats(0.0, 50.0), st.integers(0, 2 ** 31))
def test_strength_homogeneity(alpha, seed):
    y = np.random.default_rng(seed).random(30)
    base = strength_of_rows(y[None, :])[0]
    scaled = strength_of_rows((alpha * y)[None, :])[0]
    assert scaled == pytest.approx(alpha * base, rel=1e-9, abs=1e-12)


def test_strength_masks_and_errors():
    vals = np.ones((3, 20))
    series = PayoffSeries(vals, np.array([True, False, True]),
                          np.ones(3, bool))
    sv = strength(series)
    assert sv.nodes.tolist() == [0, 2]
    series = hide_nodes(series, [0])
    sv = strength(series)
    assert sv.nodes.tolist() == [2]
    dead = PayoffSeries(vals, np.zeros(3, bool), np.ones(3, bool))
    with pytest.raises(InputError):
        strength(dead)


def test_strength_nyquist_index():
    sv = strength(_series(np.ones((1, 10))))
    assert sv.F_max == 5


def test_strength_degree_rank_correlation():
    g = graphs.erdos_renyi(50, 0.2, seed=1)
    deg = graphs.degree_sequence(g)
    series = simulate(g, GameParams(T=10_000, seed=4))
    sv = strength(series)
    rho = _spearman(sv.S, deg[sv.nodes].astype(float))
    assert rho >= 0.99


def _avg_rank(x):
    x = np.asarray(x, dtype=np.float64)
    order = np.argsort(x, kind="stable")
    ranks = np.empty(x.size)
    sx = x[order]
    i = 0
    while i < x.size:
        j = i
        while j + 1 < x.size and sx[j + 1] == sx[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2
        i = j + 1
    return ranks


def _spearman(a, b):
    ra = _avg_rank(a) - (len(a) - 1) / 2
    rb = _avg_rank(b) - (len(b) - 1) / 2
    return float((ra * rb).sum() / np.sqrt((ra ** 2).sum() * (rb ** 2).sum()))


def test_strength_degree_proportionality_20_nodes():
    g = graphs.erdos_renyi(20, 0.3, seed=5)
    deg = graphs.degree_sequence(g)
    series = simulate(g, GameParams(T=2000, seed=6))
    sv = strength(series)
    keep = deg[sv.nodes] > 0
    ratio = sv.S[keep] / deg[sv.nodes][keep]
    assert ratio.std() / ratio.mean() < 0.05  # S_i / k_i nearly constant

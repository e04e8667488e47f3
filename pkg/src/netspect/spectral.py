"""DFT magnitude spectra and the per-node spectral strength S_i.

The strength averages DFT magnitudes over the nonzero frequencies up to
Nyquist, F = {1, ..., floor(T/2)} (Nyquist included once for even T):

    S_i = (1/T) * sum_{f in F} |P_hat_i(f)|

applied to the cumulative payoff series, whose post-convergence ramp has
slope proportional to degree — hence S_i ∝ k_i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, InputError
from .game import PayoffSeries


@dataclass(frozen=True)
class Spectrum:
    """Full-length DFT magnitudes |x_hat[f]|, f = 0..T-1."""

    magnitudes: np.ndarray


@dataclass(frozen=True)
class StrengthVector:
    """Spectral strengths for the observable active nodes.

    S is indexed by position in `nodes` (original node ids).
    """

    S: np.ndarray
    nodes: np.ndarray
    F_max: int  # highest frequency index used, floor(T/2)


def dft_magnitudes(x) -> Spectrum:
    """Exact-length transform magnitudes (no padding), any T >= 2."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.size < 2:
        raise ParameterError("input must be a 1-D sequence of length >= 2")
    T = x.size
    half = np.abs(np.fft.rfft(x))
    mags = np.empty(T)
    mags[: half.size] = half
    # conjugate symmetry of the real-input transform fills the upper half
    mags[half.size:] = half[1: T - half.size + 1][::-1]
    return Spectrum(mags)


def strength_of_rows(rows: np.ndarray) -> np.ndarray:
    """Row-wise strength of an (n, T) matrix over F = {1..floor(T/2)}."""
    rows = np.asarray(rows, dtype=np.float64)
    T = rows.shape[1]
    if T < 2:
        raise ParameterError("T must be >= 2")
    mags = np.abs(np.fft.rfft(rows, axis=1))
    return mags[:, 1: T // 2 + 1].sum(axis=1) / T


def strength(series: PayoffSeries, cumulative: bool = True) -> StrengthVector:
    """Per-node spectral strengths of a payoff series.

    Only observable active rows produce entries.  By default the running
    cumulative payoff is transformed (nodes accrue rewards from zero), which
    is what makes S scale linearly with degree after convergence.
    """
    keep = series.observable_mask & series.active_mask
    nodes = np.nonzero(keep)[0]
    if nodes.size == 0:
        raise InputError("no observable active rows")
    data = series.accumulated() if cumulative else series.values
    S = strength_of_rows(data[nodes])
    return StrengthVector(S, nodes, series.T // 2)


def save_strength_csv(sv: StrengthVector, path) -> None:
    with open(path, "w") as fh:
        fh.write("node,strength\n")
        for node, s in zip(sv.nodes, sv.S):
            fh.write(f"{node},{float(s)!r}\n")

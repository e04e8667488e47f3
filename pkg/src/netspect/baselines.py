"""Pairwise association baselines for ROC comparison: correlation matrix,
binned mutual information, and Granger causality.

All three consume the per-round payoff series of the observable nodes and
emit an (n_obs, n_obs) score matrix with zero diagonal, fed to the same ROC
engine as the spectral method's scores.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .game import PayoffSeries

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScoreMatrix:
    scores: np.ndarray
    nodes: np.ndarray
    method: str


def _observable_rows(series: PayoffSeries) -> tuple[np.ndarray, np.ndarray]:
    keep = series.observable_mask & series.active_mask
    nodes = np.nonzero(keep)[0]
    if nodes.size < 2:
        raise InputError("need at least two observable rows")
    return series.values[nodes], nodes


def correlation_scores(series: PayoffSeries) -> ScoreMatrix:
    """Absolute Pearson correlation per pair; constant rows score 0."""
    X, nodes = _observable_rows(series)
    Xc = X - X.mean(axis=1, keepdims=True)
    sd = np.sqrt((Xc ** 2).sum(axis=1))
    ok = sd > 0
    denom = np.outer(sd, sd)
    denom[denom == 0] = 1.0
    C = np.abs(Xc @ Xc.T) / denom
    C[~ok, :] = 0.0
    C[:, ~ok] = 0.0
    np.fill_diagonal(C, 0.0)
    return ScoreMatrix(C, nodes, "CM")


def _bin_rows(X: np.ndarray, bins: int) -> np.ndarray:
    """Equal-width binning per row; constant rows map to bin 0."""
    lo = X.min(axis=1, keepdims=True)
    hi = X.max(axis=1, keepdims=True)
    span = hi - lo
    span[span == 0] = 1.0
    idx = np.floor((X - lo) / span * bins).astype(np.int64)
    return np.clip(idx, 0, bins - 1)


def mutual_information_scores(series: PayoffSeries, bins: int = 16) -> ScoreMatrix:
    """Plug-in mutual information (nats) on equal-width binned rows."""
    if bins < 2:
        raise InputError("bins must be >= 2")
    X, nodes = _observable_rows(series)
    B = _bin_rows(X, bins)
    n, T = B.shape
    M = np.zeros((n, n))
    # per-row marginal entropies
    H = np.empty(n)
    for i in range(n):
        counts = np.bincount(B[i], minlength=bins) / T
        pz = counts[counts > 0]
        H[i] = float(-(pz * np.log(pz)).sum())
    for i in range(n):
        for j in range(i + 1, n):
            joint = np.bincount(B[i] * bins + B[j], minlength=bins * bins) / T
            pz = joint[joint > 0]
            Hij = float(-(pz * np.log(pz)).sum())
            M[i, j] = M[j, i] = max(0.0, H[i] + H[j] - Hij)
    return ScoreMatrix(M, nodes, "MI")


def granger_scores(series: PayoffSeries, order: int = 1) -> ScoreMatrix:
    """Log variance ratio of restricted vs lag-augmented AR models.

    score(i -> j) = log(var_restricted / var_full), floored at 0 and
    symmetrized by max for undirected ROC use.
    """
    if order < 1:
        raise InputError("order must be >= 1")
    X, nodes = _observable_rows(series)
    n, T = X.shape
    if T <= 10 * order:
        raise InputError("series too short for the requested AR order")
    lags = np.arange(order)
    y_all = X[:, order:]
    # design blocks: column of ones + own lags per node
    directed = np.zeros((n, n))
    own = [np.column_stack([np.ones(T - order)] +
                           [X[j, order - 1 - l: T - 1 - l] for l in lags])
           for j in range(n)]
    for j in range(n):
        y = y_all[j]
        var_r = _residual_variance(own[j], y)
        for i in range(n):
            if i == j:
                continue
            design = np.column_stack(
                [own[j]] + [X[i, order - 1 - l: T - 1 - l] for l in lags])
            var_f = _residual_variance(design, y)
            if var_r <= 0 or var_f <= 0:
                directed[i, j] = 0.0
            else:
                directed[i, j] = max(0.0, float(np.log(var_r / var_f)))
    M = np.maximum(directed, directed.T)
    np.fill_diagonal(M, 0.0)
    return ScoreMatrix(M, nodes, "GC")


def _residual_variance(design: np.ndarray, y: np.ndarray) -> float:
    try:
        coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    except np.linalg.LinAlgError:
        log.warning("singular regression in Granger baseline; scoring 0")
        return 0.0
    resid = y - design @ coef
    return float(resid.var())


def save_scores_csv(sm: ScoreMatrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"# method={sm.method}\n")
        fh.write("," + ",".join(str(v) for v in sm.nodes) + "\n")
        for a, node in enumerate(sm.nodes):
            fh.write(str(node) + "," +
                     ",".join(repr(float(v)) for v in sm.scores[a]) + "\n")

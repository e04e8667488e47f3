"""Evaluation metrics: confusion counts, SREL/SRNL, ROC/AUC,
Accuracy-I/Accuracy-II, and a small 1-D mode-clustering helper used for the
intercept-bifurcation analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def pairs(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def confusion(M_pred: np.ndarray, A_true: np.ndarray) -> ConfusionCounts:
    """Counts over unordered node pairs (diagonal excluded)."""
    M_pred = np.asarray(M_pred, dtype=bool)
    A_true = np.asarray(A_true, dtype=bool)
    if M_pred.shape != A_true.shape or M_pred.ndim != 2:
        raise InputError("prediction and truth must be same-shape square matrices")
    iu = np.triu_indices(M_pred.shape[0], 1)
    p, t = M_pred[iu], A_true[iu]
    return ConfusionCounts(
        tp=int((p & t).sum()), fp=int((p & ~t).sum()),
        tn=int((~p & ~t).sum()), fn=int((~p & t).sum()))


def srel_srnl(counts: ConfusionCounts) -> tuple[float | None, float | None]:
    """SREL = TPR, SRNL = 1 - FPR; None marks an undefined denominator."""
    srel = counts.tp / (counts.tp + counts.fn) if counts.tp + counts.fn else None
    srnl = 1.0 - counts.fp / (counts.fp + counts.tn) if counts.fp + counts.tn else None
    return srel, srnl


@dataclass(frozen=True)
class RocCurve:
    points: tuple  # ((fpr, tpr), ...) sorted by fpr, (0,0) .. (1,1)
    auc: float


def roc(scores: np.ndarray, A_true: np.ndarray) -> RocCurve:
    """Threshold sweep over distinct score values; trapezoidal AUC.

    Equal scores form a single step (ties are never split).
    """
    scores = np.asarray(scores, dtype=np.float64)
    A_true = np.asarray(A_true, dtype=bool)
    if scores.shape != A_true.shape:
        raise InputError("score and truth matrices must match")
    if not np.all(np.isfinite(scores)):
        raise InputError("scores must be finite")
    iu = np.triu_indices(scores.shape[0], 1)
    s, t = scores[iu], A_true[iu]
    pos = int(t.sum())
    neg = t.size - pos
    order = np.argsort(-s, kind="stable")
    s, t = s[order], t[order]
    tps = np.cumsum(t)
    fps = np.cumsum(~t)
    # keep only the last index of each tied block
    last = np.nonzero(np.diff(s, append=np.nan) != 0)[0]
    tpr = np.concatenate(([0.0], tps[last] / max(pos, 1)))
    fpr = np.concatenate(([0.0], fps[last] / max(neg, 1)))
    if tpr[-1] != 1.0 or fpr[-1] != 1.0:
        tpr = np.append(tpr, 1.0)
        fpr = np.append(fpr, 1.0)
    auc = float(np.trapezoid(tpr, fpr))
    return RocCurve(tuple(zip(fpr.tolist(), tpr.tolist())), auc)


def accuracy_one(pred_neighbors, true_neighbors) -> float | None:
    """Fraction of the hidden node's true neighbors that were identified."""
    true_set = set(true_neighbors)
    if not true_set:
        return None
    return len(set(pred_neighbors) & true_set) / len(true_set)


def accuracy_two(L_pred, L_true) -> float | None:
    """Per-node min-deficit matching of external-edge counts."""
    L_pred = np.asarray(L_pred, dtype=np.int64)
    L_true = np.asarray(L_true, dtype=np.int64)
    if L_pred.shape != L_true.shape:
        raise InputError("hidden-link count vectors must match")
    total = int(L_true.sum())
    if total == 0:
        return None
    matched = int(np.minimum(L_pred, L_true).sum())
    return matched / total


def cluster_modes(values, ratio_threshold: float = 1.5,
                  iters: int = 64) -> tuple[int, tuple]:
    """Two-means split of a 1-D sample; reports 1 or 2 modes.

    Declares two modes when both clusters are occupied and the center ratio
    exceeds `ratio_threshold` — the bimodality here is a wide multiplicative
    split (payoff-level ratio), so a ratio test is the robust discriminator.
    """
    x = np.sort(np.asarray(values, dtype=np.float64))
    if x.size < 2 or x[0] == x[-1]:
        return 1, (float(x.mean()),)
    lo, hi = float(x[0]), float(x[-1])
    for _ in range(iters):
        mid = (lo + hi) / 2
        a, b = x[x <= mid], x[x > mid]
        if a.size == 0 or b.size == 0:
            break
        lo2, hi2 = float(a.mean()), float(b.mean())
        if (lo2, hi2) == (lo, hi):
            break
        lo, hi = lo2, hi2
    a, b = x[x <= (lo + hi) / 2], x[x > (lo + hi) / 2]
    if a.size == 0 or b.size == 0 or lo <= 0:
        return 1, (float(x.mean()),)
    if hi / lo > ratio_threshold:
        return 2, (lo, hi)
    return 1, (float(x.mean()),)


def save_roc_csv(curve: RocCurve, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"# auc={curve.auc!r}\n")
        fh.write("fpr,tpr\n")
        for fpr, tpr in curve.points:
            fh.write(f"{float(fpr)!r},{float(tpr)!r}\n")

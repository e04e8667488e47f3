import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from netspect.errors import InputError
from netspect.metrics import (ConfusionCounts, accuracy_one, accuracy_two,
                              cluster_modes, confusion, roc, srel_srnl)

TRI = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=bool)


def test_confusion_perfect():
    c = confusion(TRI, TRI)
    assert (c.tp, c.fp, c.tn, c.fn) == (3, 0, 0, 0)
    assert srel_srnl(c)[0] == 1.0


def test_confusion_empty_prediction():
    c = confusion(np.zeros((3, 3), bool), TRI)
    assert (c.tp, c.fp, c.tn, c.fn) == (0, 0, 0, 3)
    srel, srnl = srel_srnl(c)
    assert srel == 0.0 and srnl is None  # no non-links to score


def test_tpr_arithmetic():
    c = ConfusionCounts(tp=3, fp=0, tn=6, fn=1)
    srel, srnl = srel_srnl(c)
    assert srel == pytest.approx(0.75)
    assert srnl == 1.0


def test_confusion_pair_count_invariant():
    rng = np.random.default_rng(0)
    for _ in range(10):
        n = int(rng.integers(3, 12))
        a = rng.random((n, n)) < 0.5
        b = rng.random((n, n)) < 0.5
        a = np.triu(a, 1); a = a | a.T
        b = np.triu(b, 1); b = b | b.T
        c = confusion(a, b)
        assert c.pairs == n * (n - 1) // 2


def test_confusion_shape_mismatch():
    with pytest.raises(InputError):
        confusion(np.zeros((3, 3), bool), np.zeros((4, 4), bool))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50),
       st.integers(0, 50))
def test_srel_srnl_identity(tp, fp, tn, fn):
    c = ConfusionCounts(tp, fp, tn, fn)
    srel, srnl = srel_srnl(c)
    if tp + fn:
        assert srel == tp / (tp + fn)
    else:
        assert srel is None
    if fp + tn:
        assert srnl == 1 - fp / (fp + tn)
    else:
        assert srnl is None


def _sym(scores):
    s = np.triu(scores, 1)
    return s + s.T


def test_roc_perfect_separation():
    truth = TRI.copy()
    truth[0, 1] = truth[1, 0] = False
    scores = _sym(truth.astype(float))
    assert roc(scores, truth).auc == pytest.approx(1.0)


def test_roc_constant_scores():
    truth = np.zeros((4, 4), bool)
    truth[0, 1] = truth[1, 0] = truth[2, 3] = truth[3, 2] = True
    curve = roc(np.zeros((4, 4)), truth)
    assert curve.auc == pytest.approx(0.5)
    assert curve.points[0] == (0.0, 0.0) and curve.points[-1] == (1.0, 1.0)


def test_roc_random_scores_null():
    rng = np.random.default_rng(1)
    n = 50
    truth = np.triu(rng.random((n, n)) < 0.15, 1)
    truth = truth | truth.T
    aucs = []
    for _ in range(100):
        scores = _sym(rng.random((n, n)))
        aucs.append(roc(scores, truth).auc)
    assert abs(np.mean(aucs) - 0.5) < 0.05


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 31))
def test_roc_rank_invariance(seed):
    rng = np.random.default_rng(seed)
    n = 8
    truth = np.triu(rng.random((n, n)) < 0.4, 1)
    truth = truth | truth.T
    scores = _sym(rng.random((n, n)))
    a = roc(scores, truth)
    b = roc(np.exp(3 * scores), truth)  # strictly increasing transform
    assert a.points == b.points
    assert a.auc == pytest.approx(b.auc)


def test_roc_rejects_nonfinite():
    s = np.zeros((3, 3))
    s[0, 1] = np.inf
    with pytest.raises(InputError):
        roc(s, TRI)


def test_accuracy_one():
    assert accuracy_one({3, 4}, {3, 4}) == 1.0
    assert accuracy_one({3}, {3, 4}) == 0.5
    assert accuracy_one(set(), {3, 4}) == 0.0
    assert accuracy_one({1}, set()) is None


def test_accuracy_two():
    assert accuracy_two([2, 1, 0], [2, 1, 0]) == 1.0
    assert accuracy_two([2, 0], [4, 0]) == 0.5
    assert accuracy_two([0, 0], [3, 2]) == 0.0
    assert accuracy_two([1, 1], [0, 0]) is None
    assert accuracy_two([5, 0], [2, 0]) == 1.0  # over-counts cap at truth


def test_cluster_modes_bimodal():
    vals = [10.0] * 5 + [30.0] * 5
    n, centers = cluster_modes(vals)
    assert n == 2
    assert centers[1] / centers[0] == pytest.approx(3.0)


def test_cluster_modes_unimodal():
    rng = np.random.default_rng(2)
    n, centers = cluster_modes(rng.normal(100.0, 1.0, size=20))
    assert n == 1
    assert centers[0] == pytest.approx(100.0, rel=0.05)


def test_cluster_modes_degenerate():
    assert cluster_modes([5.0])[0] == 1
    assert cluster_modes([5.0, 5.0, 5.0])[0] == 1

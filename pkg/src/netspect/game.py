"""Prisoner's Dilemma on a graph with Fermi strategy updates.

Each round every active node plays its active neighbors simultaneously and
collects the summed payoff; afterwards every node picks a random neighbor and
imitates it with the Fermi probability 1/(1+exp((P_i - P_j)/kappa)).  The
per-round payoffs are recorded; inference consumes the running cumulative sum
(nodes start from zero accumulated payoff).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from numba import njit

from .errors import ParameterError, InputError

COOPERATE = 0
DEFECT = 1

EXP_CLAMP = 700.0  # exp argument clamp; beyond this the probability saturates


@dataclass(frozen=True)
class GameParams:
    """Payoff matrix entries, selection noise and run length."""

    r: float = 3.0
    s: float = 0.0
    t: float = 5.0
    p: float = 1.0
    kappa: float = 1e8
    T: int = 1000
    seed: int = 0
    synchronous: bool = True

    def validate(self):
        if self.T < 2:
            raise ParameterError("T must be >= 2")
        if self.kappa <= 0:
            raise ParameterError("kappa must be positive")


@dataclass
class PayoffSeries:
    """Per-round payoff matrix plus activity/observability masks.

    values[i, t] is node i's summed payoff in round t (not accumulated).
    Suppressed nodes have identically-zero rows and active_mask False; hidden
    nodes keep their rows but observable_mask False — inference must not look
    at them.
    """

    values: np.ndarray
    active_mask: np.ndarray
    observable_mask: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def T(self) -> int:
        return self.values.shape[1]

    def accumulated(self) -> np.ndarray:
        """Running cumulative payoff P_i(1..t); the series inference transforms."""
        return np.cumsum(self.values, axis=1)

    def observable_indices(self) -> np.ndarray:
        return np.nonzero(self.observable_mask)[0]


def round_payoff(strategy_i: int, neighbor_strategies, params: GameParams) -> float:
    """Summed single-round payoff of a node against its neighbor strategies."""
    table = np.array([[params.r, params.s], [params.t, params.p]])
    return float(sum(table[strategy_i, sj] for sj in neighbor_strategies))


def fermi_probability(P_i: float, P_j: float, kappa: float) -> float:
    """Probability that i adopts j's strategy, 1/(1+exp((P_i-P_j)/kappa))."""
    if kappa <= 0:
        raise ParameterError("kappa must be positive")
    x = (P_i - P_j) / kappa
    if x > EXP_CLAMP:
        return 0.0
    if x < -EXP_CLAMP:
        return 1.0
    return 1.0 / (1.0 + np.exp(x))


@njit(cache=True)
def _run_sync(indptr, indices, strat, T, r, s, t, p, kappa, rng, out):
    """Synchronous play-then-update loop over a CSR adjacency."""
    n = strat.shape[0]
    nxt = strat.copy()
    for step in range(T):
        for i in range(n):
            pay = 0.0
            si = strat[i]
            for m in range(indptr[i], indptr[i + 1]):
                sj = strat[indices[m]]
                if si == 0:
                    pay += r if sj == 0 else s
                else:
                    pay += t if sj == 0 else p
            out[i, step] = pay
        for i in range(n):
            deg = indptr[i + 1] - indptr[i]
            if deg == 0:
                continue
            j = indices[indptr[i] + int(rng.random() * deg)]
            x = (out[i, step] - out[j, step]) / kappa
            if x > EXP_CLAMP:
                x = EXP_CLAMP
            elif x < -EXP_CLAMP:
                x = -EXP_CLAMP
            w = 1.0 / (1.0 + np.exp(x))
            if rng.random() < w:
                nxt[i] = strat[j]
        for i in range(n):
            strat[i] = nxt[i]


@njit(cache=True)
def _run_async(indptr, indices, strat, T, r, s, t, p, kappa, rng, out):
    """Random-order sequential update variant (payoffs still computed jointly)."""
    n = strat.shape[0]
    order = np.empty(n, np.int64)
    for step in range(T):
        for i in range(n):
            pay = 0.0
            si = strat[i]
            for m in range(indptr[i], indptr[i + 1]):
                sj = strat[indices[m]]
                if si == 0:
                    pay += r if sj == 0 else s
                else:
                    pay += t if sj == 0 else p
            out[i, step] = pay
        for i in range(n):
            order[i] = i
        for i in range(n - 1, 0, -1):
            k = int(rng.random() * (i + 1))
            order[i], order[k] = order[k], order[i]
        for q in range(n):
            i = order[q]
            deg = indptr[i + 1] - indptr[i]
            if deg == 0:
                continue
            j = indices[indptr[i] + int(rng.random() * deg)]
            x = (out[i, step] - out[j, step]) / kappa
            if x > EXP_CLAMP:
                x = EXP_CLAMP
            elif x < -EXP_CLAMP:
                x = -EXP_CLAMP
            w = 1.0 / (1.0 + np.exp(x))
            if rng.random() < w:
                strat[i] = strat[j]


def _csr(A: np.ndarray, suppressed) -> tuple[np.ndarray, np.ndarray]:
    n = A.shape[0]
    Ae = A.copy()
    if suppressed:
        sup = list(suppressed)
        Ae[sup, :] = False
        Ae[:, sup] = False
    indptr = np.zeros(n + 1, dtype=np.int64)
    cols = []
    for i in range(n):
        nb = np.nonzero(Ae[i])[0]
        cols.append(nb)
        indptr[i + 1] = indptr[i] + nb.size
    indices = np.concatenate(cols) if n else np.zeros(0, dtype=np.int64)
    return indptr, indices.astype(np.int64)


def initial_strategies(n: int, seed_entropy) -> np.ndarray:
    """Uniform random C/D assignment from a dedicated RNG stream."""
    rng = np.random.default_rng(seed_entropy)
    return (rng.random(n) < 0.5).astype(np.int8)


def simulate(graph, params: GameParams, suppressed=(), initial=None,
             hidden=()) -> PayoffSeries:
    """Run T rounds of the game; returns the per-round payoff series.

    A suppressed node's incident edges are inactive for the whole run and its
    payoff row stays zero.  The seed fully determines the trajectory: one
    SeedSequence child draws the initial strategies, another drives the
    dynamics, so a suppressed re-run shares both with the base run.
    """
    params.validate()
    n = graph.n
    for v in suppressed:
        if not (0 <= v < n):
            raise ParameterError(f"suppressed node {v} out of range")
    ss = np.random.SeedSequence([int(params.seed)])
    child_init, child_dyn = ss.spawn(2)
    if initial is None:
        strat = initial_strategies(n, child_init)
    else:
        strat = np.asarray(initial, dtype=np.int8)
        if strat.shape != (n,):
            raise ParameterError("initial strategies must have length n")
    indptr, indices = _csr(graph.adjacency(), suppressed)
    out = np.zeros((n, params.T), dtype=np.float64)
    rng = np.random.default_rng(child_dyn)
    kernel = _run_sync if params.synchronous else _run_async
    kernel(indptr, indices, strat.copy(), params.T,
           params.r, params.s, params.t, params.p, params.kappa, rng, out)
    active = np.ones(n, dtype=bool)
    if suppressed:
        active[list(suppressed)] = False
    observable = np.ones(n, dtype=bool)
    if hidden:
        observable[list(hidden)] = False
    return PayoffSeries(out, active, observable)


def hide_nodes(series: PayoffSeries, hidden) -> PayoffSeries:
    """Mark nodes unobservable; their rows stay but inference must skip them."""
    observable = series.observable_mask.copy()
    for v in hidden:
        if not (0 <= v < series.n):
            raise ParameterError(f"hidden node {v} out of range")
        observable[v] = False
    if not observable.any():
        raise InputError("no observable nodes remain")
    return PayoffSeries(series.values, series.active_mask, observable)


def save_series_csv(series: PayoffSeries, path) -> None:
    """CSV dump: header row with n, T and masks, then one row per node."""
    with open(path, "w") as fh:
        fh.write(f"# n={series.n} T={series.T}\n")
        fh.write("# active=" + "".join("1" if a else "0" for a in series.active_mask) + "\n")
        fh.write("# observable=" + "".join("1" if o else "0" for o in series.observable_mask) + "\n")
        for row in series.values:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def load_series_csv(path) -> PayoffSeries:
    masks = {}
    rows = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        key, val = tok.split("=", 1)
                        masks[key] = val
                continue
            rows.append([float(v) for v in line.split(",")])
    values = np.array(rows, dtype=np.float64)
    n = values.shape[0]
    active = np.array([c == "1" for c in masks.get("active", "1" * n)])
    observable = np.array([c == "1" for c in masks.get("observable", "1" * n)])
    return PayoffSeries(values, active, observable)

"""Declarative experiment runner.

An ExperimentConfig names one of the experiment families from the study
(linearity validation, reconstruction benchmark, time-series-length sweep,
single/multi hidden-node, baseline ROC comparison), resolves per-trial seeds
from the master seed by a counter scheme, runs the trials (optionally in
parallel processes), and writes deterministic CSV outputs plus a mean/std
summary.  Wall-clock timings are reported on stdout only so that output
files stay byte-identical across re-runs.
"""

from __future__ import annotations

import concurrent.futures
import csv
import os
import time
from dataclasses import dataclass, field, replace, asdict

import numpy as np

from . import baselines, graphs, inference, metrics
from .errors import ConfigError
from .game import GameParams, simulate
from .inference import SimulationProvider, dft_score_matrix, fit_linearity, reconstruct
from .spectral import strength

EXPERIMENTS = ("linearity", "reconstruct", "length_sweep",
               "hidden_single", "hidden_multi", "baselines_roc")

# seed-derivation stream tags (counter-based per-trial scheme)
_STREAM_GRAPH = 0
_STREAM_GAME = 1
_STREAM_HIDDEN = 2


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str = "reconstruct"
    # graph source: either a generator spec or an edge-list path
    graph_model: str = "ER"
    n: int = 100
    er_p: float = 0.1133
    ba_m: int = 6
    ws_k: int = 12
    ws_p_rw: float = 0.3
    edge_list: str = ""
    graph_seed: int | None = None   # None: fresh graph per trial
    # game parameters; T <= 0 means "use t_factor * n"
    r: float = 3.0
    s: float = 0.0
    t: float = 5.0
    p: float = 1.0
    kappa: float = 1e8
    T: int = 0
    t_factor: int = 20
    T_list: tuple = ()
    synchronous: bool = True
    # hidden-node selection
    hidden_count: int = 0
    hidden_index: int | None = None
    min_hidden_degree: int = 1
    # run control
    trials: int = 10
    seed: int = 0
    jobs: int = 1
    out: str = "out"
    mi_bins: int = 16
    gc_order: int = 1

    def validate(self):
        if self.kind not in EXPERIMENTS:
            raise ConfigError(f"kind: unknown experiment {self.kind!r}")
        if self.trials < 1:
            raise ConfigError("trials: must be >= 1")
        if self.kind == "length_sweep" and len(self.T_list) < 2:
            raise ConfigError("T_list: length sweep needs at least two lengths")
        if self.kind in ("hidden_single", "hidden_multi"):
            count = self.resolved_hidden_count()
            if not (1 <= count < self.n):
                raise ConfigError("hidden_count: must be in [1, n)")
        if not self.edge_list:
            try:
                self.graph_spec(0).validate()
            except Exception as exc:
                raise ConfigError(f"graph: {exc}") from exc
        if self.resolve_T(self.n) < 2:
            raise ConfigError("T: resolved length must be >= 2")

    def resolved_hidden_count(self) -> int:
        if self.kind == "hidden_single":
            return 1
        return self.hidden_count

    def resolve_T(self, n: int) -> int:
        if self.T > 0:
            return self.T
        if self.kind == "linearity":
            return 10_000
        return self.t_factor * n

    def graph_spec(self, seed: int) -> graphs.GraphModelSpec:
        return graphs.GraphModelSpec(
            model=self.graph_model, n=self.n, p=self.er_p, m=self.ba_m,
            ring_k=self.ws_k, p_rw=self.ws_p_rw, seed=seed)


def derive_seed(master: int, trial: int, stream: int) -> int:
    """Counter-based per-trial seed: independent streams per (trial, role)."""
    return int(np.random.SeedSequence([master, trial, stream]).generate_state(1)[0])


def _trial_graph(cfg: ExperimentConfig, trial: int) -> graphs.Graph:
    if cfg.edge_list:
        return graphs.load_edge_list(cfg.edge_list)
    gseed = cfg.graph_seed if cfg.graph_seed is not None \
        else derive_seed(cfg.seed, trial, _STREAM_GRAPH)
    return graphs.generate(cfg.graph_spec(gseed))


def _trial_params(cfg: ExperimentConfig, trial: int, n: int,
                  T: int | None = None) -> GameParams:
    return GameParams(r=cfg.r, s=cfg.s, t=cfg.t, p=cfg.p, kappa=cfg.kappa,
                      T=T if T is not None else cfg.resolve_T(n),
                      seed=derive_seed(cfg.seed, trial, _STREAM_GAME),
                      synchronous=cfg.synchronous)


def _pick_hidden(cfg: ExperimentConfig, trial: int, g: graphs.Graph) -> tuple:
    if cfg.hidden_index is not None:
        return (cfg.hidden_index,)
    count = cfg.resolved_hidden_count()
    deg = graphs.degree_sequence(g)
    eligible = np.nonzero(deg >= cfg.min_hidden_degree)[0]
    if eligible.size < count:
        raise ConfigError("hidden_count: not enough eligible nodes")
    rng = np.random.default_rng(derive_seed(cfg.seed, trial, _STREAM_HIDDEN))
    return tuple(int(v) for v in rng.choice(eligible, size=count, replace=False))


def _recon_metrics(g: graphs.Graph, result, hidden=()) -> dict:
    A = g.adjacency()
    obs = result.nodes
    truth = A[np.ix_(obs, obs)]
    counts = metrics.confusion(result.M, truth)
    srel, srnl = metrics.srel_srnl(counts)
    return {"srel": srel, "srnl": srnl, "tp": counts.tp, "fp": counts.fp,
            "tn": counts.tn, "fn": counts.fn}


def run_trial(cfg: ExperimentConfig, trial: int) -> list[dict]:
    """One trial of the configured experiment; returns metric rows."""
    g = _trial_graph(cfg, trial)
    kind = cfg.kind
    if kind == "linearity":
        params = _trial_params(cfg, trial, g.n)
        sv = strength(simulate(g, params))
        fit = fit_linearity(sv.S, graphs.degree_sequence(g)[sv.nodes])
        return [{"trial": trial, "seed": params.seed, "beta": fit.beta,
                 "r_squared": fit.r_squared, "S_p_hat": fit.S_p_hat,
                 "excluded": fit.n_excluded}]
    if kind == "reconstruct":
        params = _trial_params(cfg, trial, g.n)
        result = reconstruct(SimulationProvider(g, params))
        row = {"trial": trial, "seed": params.seed}
        row.update(_recon_metrics(g, result))
        row["l_sum"] = int(result.L.sum())
        return [row]
    if kind == "length_sweep":
        rows = []
        for T in cfg.T_list:
            params = _trial_params(cfg, trial, g.n, T=int(T))
            result = reconstruct(SimulationProvider(g, params))
            row = {"trial": trial, "seed": params.seed, "T": int(T)}
            row.update(_recon_metrics(g, result))
            rows.append(row)
        return rows
    if kind == "hidden_single":
        hidden = _pick_hidden(cfg, trial, g)
        params = _trial_params(cfg, trial, g.n)
        result = reconstruct(SimulationProvider(g, params, hidden=hidden))
        A = g.adjacency()
        true_nb = set(np.nonzero(A[hidden[0]])[0].tolist()) - set(hidden)
        pred_nb = {int(result.nodes[a]) for a in np.nonzero(result.L > 0)[0]}
        acc1 = metrics.accuracy_one(pred_nb, true_nb)
        lo, hi = result.hidden_bounds
        return [{"trial": trial, "seed": params.seed, "hidden": hidden[0],
                 "accuracy_one": acc1, "l_sum": int(result.L.sum()),
                 "bound_lo": lo, "bound_hi": hi}]
    if kind == "hidden_multi":
        hidden = _pick_hidden(cfg, trial, g)
        params = _trial_params(cfg, trial, g.n)
        result = reconstruct(SimulationProvider(g, params, hidden=hidden))
        A = g.adjacency()
        L_true = A[np.ix_(result.nodes, list(hidden))].sum(axis=1)
        acc2 = metrics.accuracy_two(result.L, L_true)
        lo, hi = result.hidden_bounds
        contained = int(lo <= len(hidden) <= hi)
        return [{"trial": trial, "seed": params.seed,
                 "hidden": ";".join(str(h) for h in hidden),
                 "accuracy_two": acc2, "true_external": int(L_true.sum()),
                 "bound_lo": lo, "bound_hi": hi,
                 "bounds_contain_truth": contained}]
    if kind == "baselines_roc":
        params = _trial_params(cfg, trial, g.n)
        provider = SimulationProvider(g, params)
        A = g.adjacency()
        base = provider.base()
        row = {"trial": trial, "seed": params.seed}
        row["auc_dft"] = metrics.roc(dft_score_matrix(provider), A).auc
        row["auc_cm"] = metrics.roc(
            baselines.correlation_scores(base).scores, A).auc
        row["auc_mi"] = metrics.roc(
            baselines.mutual_information_scores(base, cfg.mi_bins).scores, A).auc
        row["auc_gc"] = metrics.roc(
            baselines.granger_scores(base, cfg.gc_order).scores, A).auc
        row["mi_bins"] = cfg.mi_bins
        row["gc_order"] = cfg.gc_order
        return [row]
    raise ConfigError(f"kind: unknown experiment {kind!r}")


def _run_trial_star(args):
    return run_trial(*args)


def run(cfg: ExperimentConfig, verbose: bool = True) -> dict:
    """Execute all trials, write CSV outputs, return rows + summary."""
    cfg.validate()
    os.makedirs(cfg.out, exist_ok=True)
    t0 = time.perf_counter()
    rows: list[dict] = []
    if cfg.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            for chunk in ex.map(_run_trial_star,
                                [(cfg, t) for t in range(cfg.trials)]):
                rows.extend(chunk)
    else:
        for t in range(cfg.trials):
            rows.extend(run_trial(cfg, t))
    elapsed = time.perf_counter() - t0
    rows.sort(key=lambda r: (r["trial"], r.get("T", 0)))
    metrics_path = os.path.join(cfg.out, "metrics.csv")
    _write_rows(metrics_path, rows)
    summary = summarize(rows)
    _write_summary(os.path.join(cfg.out, "summary.csv"), summary)
    _write_config(os.path.join(cfg.out, "config_resolved.txt"), cfg)
    if verbose:
        print(f"{cfg.kind}: {cfg.trials} trial(s) in {elapsed:.1f}s "
              f"-> {metrics_path}")
        for key, (mean, std) in summary.items():
            print(f"  {key}: {mean:.4f} +/- {std:.4f}")
    return {"rows": rows, "summary": summary, "elapsed": elapsed}


def summarize(rows: list[dict]) -> dict:
    """mean +/- std (population) of every numeric column."""
    out = {}
    if not rows:
        return out
    for key in rows[0]:
        if key in ("trial", "seed", "hidden"):
            continue
        vals = [r[key] for r in rows if isinstance(r.get(key), (int, float))
                and r.get(key) is not None]
        if vals and len(vals) == len(rows):
            arr = np.array(vals, dtype=np.float64)
            out[key] = (float(arr.mean()), float(arr.std()))
    return out


def _fmt(v) -> str:
    if v is None:
        return "NA"
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def _write_rows(path, rows: list[dict]) -> None:
    if not rows:
        with open(path, "w") as fh:
            fh.write("")
        return
    cols = list(rows[0].keys())
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(cols)
        for r in rows:
            writer.writerow([_fmt(r.get(c)) for c in cols])


def _write_summary(path, summary: dict) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["metric", "mean", "std"])
        for key, (mean, std) in summary.items():
            writer.writerow([key, repr(mean), repr(std)])


def _write_config(path, cfg: ExperimentConfig) -> None:
    # out/jobs describe where and how the run executed, not the experiment;
    # leaving them out keeps resolved configs comparable across runs
    with open(path, "w") as fh:
        for key, value in sorted(asdict(cfg).items()):
            if key in ("out", "jobs"):
                continue
            fh.write(f"{key} = {value}\n")


# ---------------------------------------------------------------- config IO

_TUPLE_FIELDS = {"T_list"}
_NONE_FIELDS = {"graph_seed", "hidden_index"}


def parse_config_file(path) -> dict:
    """`key = value` lines; `#` comments; keys match ExperimentConfig fields."""
    assignments = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            assignments[key.strip()] = value.strip()
    return assignments


def config_from(assignments: dict, overrides: dict | None = None) -> ExperimentConfig:
    cfg = ExperimentConfig()
    merged = dict(assignments)
    merged.update(overrides or {})
    valid = {f for f in ExperimentConfig.__dataclass_fields__}
    for key, raw in merged.items():
        if key not in valid:
            raise ConfigError(f"{key}: unknown config field")
        cfg = replace(cfg, **{key: _coerce(key, raw)})
    return cfg


def _coerce(key: str, raw):
    if not isinstance(raw, str):
        return raw
    if key in _TUPLE_FIELDS:
        return tuple(int(v) for v in raw.replace(",", " ").split())
    if key in _NONE_FIELDS:
        return None if raw.lower() in ("none", "") else int(raw)
    default = getattr(ExperimentConfig(), key)
    if isinstance(default, bool):
        if raw.lower() in ("true", "1", "yes"):
            return True
        if raw.lower() in ("false", "0", "no"):
            return False
        raise ConfigError(f"{key}: expected boolean, got {raw!r}")
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{key}: expected integer, got {raw!r}") from None
    if isinstance(default, float):
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"{key}: expected number, got {raw!r}") from None
    return raw

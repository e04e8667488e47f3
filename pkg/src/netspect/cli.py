"""Command-line interface.

Subcommands: generate, simulate, reconstruct, linearity, hidden, roc, sweep.
Experiment subcommands accept --config (key = value file), repeated --set
overrides, --seed, --jobs, and --out.  Exit codes: 0 success, 1 config
error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import graphs, harness
from .errors import ConfigError, NetspectError, ParameterError, ParseError
from .game import GameParams, save_series_csv, simulate
from .inference import SimulationProvider, reconstruct, save_reconstruction


def _add_experiment_flags(sub):
    sub.add_argument("--config", help="experiment config file (key = value lines)")
    sub.add_argument("--set", dest="overrides", action="append", default=[],
                     metavar="KEY=VALUE", help="override a config field")
    sub.add_argument("--seed", type=int, help="master seed")
    sub.add_argument("--jobs", type=int, help="parallel trial processes")
    sub.add_argument("--out", help="output directory")
    sub.add_argument("--trials", type=int, help="number of trials")


def _add_graph_flags(sub):
    sub.add_argument("--model", default="ER", choices=["ER", "BA", "WS"])
    sub.add_argument("--n", type=int, default=100)
    sub.add_argument("--p", type=float, default=0.1133, help="ER edge probability")
    sub.add_argument("--m", type=int, default=6, help="BA attachment count")
    sub.add_argument("--ring-k", type=int, default=12, help="WS ring degree")
    sub.add_argument("--p-rw", type=float, default=0.3, help="WS rewiring probability")
    sub.add_argument("--edges", help="load graph from edge-list file instead")
    sub.add_argument("--graph-seed", type=int, default=0)


def _graph_from(args) -> graphs.Graph:
    if args.edges:
        return graphs.load_edge_list(args.edges)
    spec = graphs.GraphModelSpec(model=args.model, n=args.n, p=args.p,
                                 m=args.m, ring_k=args.ring_k,
                                 p_rw=args.p_rw, seed=args.graph_seed)
    return graphs.generate(spec)


def _build_config(args, kind: str) -> harness.ExperimentConfig:
    assignments = harness.parse_config_file(args.config) if args.config else {}
    overrides = {}
    for item in args.overrides:
        if "=" not in item:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        overrides[key.strip()] = value.strip()
    for flag in ("seed", "jobs", "out", "trials"):
        value = getattr(args, flag)
        if value is not None:
            overrides[flag] = str(value)
    overrides["kind"] = kind
    return harness.config_from(assignments, overrides)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="netspect",
        description="Network reconstruction from evolutionary-game payoff series")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("generate", help="generate a synthetic graph")
    _add_graph_flags(sub)
    sub.add_argument("--out", required=True, help="edge-list output path")

    sub = subs.add_parser("simulate", help="run the game, dump payoff CSV")
    _add_graph_flags(sub)
    sub.add_argument("--T", type=int, default=0, help="rounds (0: 20*n)")
    sub.add_argument("--kappa", type=float, default=1e8)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--suppress", type=int, default=None,
                     help="suppress this node's dynamics")
    sub.add_argument("--out", required=True, help="payoff CSV output path")

    sub = subs.add_parser("reconstruct", help="reconstruct one graph's topology")
    _add_graph_flags(sub)
    sub.add_argument("--T", type=int, default=0, help="rounds (0: 20*n)")
    sub.add_argument("--kappa", type=float, default=1e8)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--hidden", type=int, action="append", default=[],
                     help="treat this node as hidden (repeatable)")
    sub.add_argument("--out", required=True, help="output directory")

    for kind, name, blurb in (
            ("linearity", "linearity", "strength vs degree linearity trials"),
            ("hidden_single", "hidden", "hidden-node detection trials"),
            ("baselines_roc", "roc", "ROC comparison vs baselines"),
            ("length_sweep", "sweep", "time-series-length sweep")):
        sub = subs.add_parser(name, help=blurb)
        _add_experiment_flags(sub)
    sub = subs.add_parser("run", help="run any experiment kind from config")
    _add_experiment_flags(sub)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ConfigError, ParameterError, ParseError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except NetspectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "generate":
        g = _graph_from(args)
        graphs.save_edge_list(g, args.out)
        print(f"wrote {args.out}: n={g.n} m={g.m} density={g.density():.4f}")
        return 0
    if cmd == "simulate":
        g = _graph_from(args)
        T = args.T if args.T > 0 else 20 * g.n
        params = GameParams(kappa=args.kappa, T=T, seed=args.seed)
        suppressed = (args.suppress,) if args.suppress is not None else ()
        series = simulate(g, params, suppressed=suppressed)
        save_series_csv(series, args.out)
        print(f"wrote {args.out}: n={series.n} T={series.T}")
        return 0
    if cmd == "reconstruct":
        g = _graph_from(args)
        T = args.T if args.T > 0 else 20 * g.n
        params = GameParams(kappa=args.kappa, T=T, seed=args.seed)
        result = reconstruct(SimulationProvider(g, params, hidden=tuple(args.hidden)))
        os.makedirs(args.out, exist_ok=True)
        edge_path = os.path.join(args.out, "reconstructed_edges.txt")
        l_path = os.path.join(args.out, "hidden_links.csv")
        save_reconstruction(result, edge_path, l_path)
        lo, hi = result.hidden_bounds
        print(f"wrote {edge_path} and {l_path}; "
              f"edges={int(result.M.sum()) // 2} hidden bounds=[{lo},{hi}]")
        return 0
    kind_by_cmd = {"linearity": "linearity", "hidden": "hidden_single",
                   "roc": "baselines_roc", "sweep": "length_sweep"}
    if cmd in kind_by_cmd:
        cfg = _build_config(args, kind_by_cmd[cmd])
    elif cmd == "run":
        assignments = harness.parse_config_file(args.config) if args.config else {}
        kind = assignments.get("kind", "reconstruct")
        cfg = _build_config(args, kind)
    else:
        raise ConfigError(f"unknown command {cmd!r}")
    harness.run(cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())

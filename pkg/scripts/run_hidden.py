#!/usr/bin/env python3
"""Hidden-node studies: single hidden node (Accuracy-I) or several hidden
nodes (Accuracy-II plus hidden-count bounds)."""

import argparse

from netspect.harness import ExperimentConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="ER", choices=["ER", "BA", "WS"])
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--er-p", type=float, default=0.03)
    ap.add_argument("--ba-m", type=int, default=6)
    ap.add_argument("--hidden-count", type=int, default=1)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="out/hidden")
    args = ap.parse_args()

    kind = "hidden_single" if args.hidden_count == 1 else "hidden_multi"
    cfg = ExperimentConfig(kind=kind, graph_model=args.model, n=args.n,
                           er_p=args.er_p, ba_m=args.ba_m,
                           hidden_count=args.hidden_count,
                           trials=args.trials, seed=args.seed,
                           jobs=args.jobs, out=args.out)
    run(cfg)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Reconstruction benchmark (SREL/SRNL) over synthetic networks."""

import argparse

from netspect.harness import ExperimentConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="ER", choices=["ER", "BA", "WS"])
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--er-p", type=float, default=0.1133)
    ap.add_argument("--ba-m", type=int, default=6)
    ap.add_argument("--ws-k", type=int, default=12)
    ap.add_argument("--T", type=int, default=0, help="rounds (0: 20*n)")
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="out/reconstruct")
    args = ap.parse_args()

    cfg = ExperimentConfig(kind="reconstruct", graph_model=args.model,
                           n=args.n, er_p=args.er_p, ba_m=args.ba_m,
                           ws_k=args.ws_k, T=args.T, trials=args.trials,
                           seed=args.seed, jobs=args.jobs, out=args.out)
    run(cfg)


if __name__ == "__main__":
    main()

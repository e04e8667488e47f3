#!/usr/bin/env python3
"""ROC comparison of the spectral (DFT) connection score against the
correlation, mutual-information and Granger baselines."""

import argparse

from netspect.harness import ExperimentConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="ER", choices=["ER", "BA", "WS"])
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--er-p", type=float, default=0.1133)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mi-bins", type=int, default=16)
    ap.add_argument("--gc-order", type=int, default=1)
    ap.add_argument("--out", default="out/roc")
    args = ap.parse_args()

    cfg = ExperimentConfig(kind="baselines_roc", graph_model=args.model,
                           n=args.n, er_p=args.er_p, trials=args.trials,
                           seed=args.seed, mi_bins=args.mi_bins,
                           gc_order=args.gc_order, out=args.out)
    result = run(cfg)
    wins = sum(1 for row in result["rows"]
               if row["auc_dft"] > max(row["auc_cm"], row["auc_mi"], row["auc_gc"]))
    print(f"DFT strictly best in {wins}/{len(result['rows'])} trials")


if __name__ == "__main__":
    main()

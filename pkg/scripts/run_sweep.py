#!/usr/bin/env python3
"""Time-series-length sweep: SREL/SRNL as a function of T."""

import argparse

from netspect.harness import ExperimentConfig, run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="ER", choices=["ER", "BA", "WS"])
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--er-p", type=float, default=0.1133)
    ap.add_argument("--T-list", type=int, nargs="+",
                    default=[500, 1000, 2000])
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="out/sweep")
    args = ap.parse_args()

    cfg = ExperimentConfig(kind="length_sweep", graph_model=args.model,
                           n=args.n, er_p=args.er_p,
                           T_list=tuple(args.T_list), trials=args.trials,
                           seed=args.seed, out=args.out)
    result = run(cfg)
    by_T = {}
    for row in result["rows"]:
        by_T.setdefault(row["T"], []).append(row)
    print("T, mean SREL, mean SRNL")
    for T in sorted(by_T):
        rows = by_T[T]
        srel = sum(r["srel"] for r in rows) / len(rows)
        srnl = sum(r["srnl"] for r in rows) / len(rows)
        print(f"{T}, {srel:.4f}, {srnl:.4f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Emit (k, r(k), C) up to a given k and, optionally, plot the approach
of the coefficients to the asymptotic constant.

    python3 scripts/figure_data.py --max-k 500 -o figure.csv --plot figure.png
"""

import argparse
import csv

from rseries import coeffs, constant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=500)
    ap.add_argument("-o", "--output", default="figure.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path")
    args = ap.parse_args()

    values = coeffs.r_series_float(args.max_k)
    c = constant.constant_c(1e-8).value
    with open(args.output, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k", "r", "C"])
        for k, v in enumerate(values):
            w.writerow([k, f"{v:.7f}", f"{c:.7f}"])
    print(f"wrote {args.output} ({args.max_k + 1} rows, C = {c:.7f})")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        ks = list(range(args.max_k + 1))
        fig, ax = plt.subplots(figsize=(8, 5))
        ax.plot(ks, values, ".", ms=3, label="r(k)")
        ax.axhline(c, ls="--", color="k", label=f"C = {c:.5f}")
        ax.set_xlabel("k")
        ax.set_ylabel("r(k)")
        ax.set_ylim(0.5, 1.05)
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()

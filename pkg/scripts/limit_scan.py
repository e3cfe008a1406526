#!/usr/bin/env python3
"""Scan (1 - x) R_n(x) as x -> 1- and report the distance to the
constant, illustrating the (1-x) ln(1/(1-x)) convergence rate.

    python3 scripts/limit_scan.py --j-max 10
"""

import argparse
import math

from rseries import asymptotics, constant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--j-max", type=int, default=9,
                    help="probe x = 1 - 2^-j for j = 2..j_max")
    args = ap.parse_args()

    c = constant.constant_c(1e-10).value
    print(f"C = {c:.10f}")
    print(f"{'j':>3} {'x':>12} {'n':>8} {'probe':>12} {'distance':>12} {'dist/(eps*ln(1/eps))':>20}")
    for j in range(2, args.j_max + 1):
        eps = 2.0 ** -j
        x = 1.0 - eps
        n = asymptotics.adequate_truncation(x)
        probe = asymptotics.limit_probe(x, n)
        dist = abs(probe - c)
        scale = eps * math.log(1.0 / eps)
        print(f"{j:>3} {x:>12.8f} {n:>8} {probe:>12.8f} {dist:>12.3e} {dist / scale:>20.3f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Random-start Newton exploration of the trace-equation system at a few
trace values; prints the classification histogram per value."""

import argparse
from collections import Counter

import numpy as np

from charvar import explore_solve
from charvar.catalog import COMPONENTS, check_admissible
from charvar.errors import ExcludedParameter


def draw_t(rng):
    while True:
        t = complex(*rng.uniform(-2.5, 2.5, 2))
        try:
            for cid in COMPONENTS:
                check_admissible(cid, t)
        except ExcludedParameter:
            continue
        return t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--values", type=int, default=3)
    ap.add_argument("--attempts", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for i in range(args.values):
        t = draw_t(rng)
        found = explore_solve(t, seed=args.seed + i, attempts=args.attempts)
        hist = Counter(label for _, label in found)
        print(f"t = {t:.4f}: {len(found)}/{args.attempts} converged")
        for label, n in sorted(hist.items()):
            print(f"    {label:14s} {n}")
        for v, label in found:
            if label == "unclassified":
                print("    UNCLASSIFIED:", v.coords())


if __name__ == "__main__":
    main()

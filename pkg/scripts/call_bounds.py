#!/usr/bin/env python3
"""Recursive calls of the adaptive recurrences relative to sum_a n_a m_a.

For random strings of growing length at several alphabet sizes, prints
calls / cross_sum and cells / cross_sum. A call bound of the form
c * sum_a n_a m_a would keep these columns flat as the length grows.
"""

import argparse
import random

from adaptive_edit.adaptive import AdaptiveContext, adaptive_di, adaptive_dir, adaptive_dr
from adaptive_edit.text_model import pair_stats, parikh


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigmas", default="2,4,8,16,64")
    ap.add_argument("--lengths", default="40,80,160,320")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'sigma':>5} {'len':>5} {'cross':>7}  " + "  ".join(f"{m + ' calls/x':>12} {m + ' cells/x':>12}" for m in ("DI", "DIR", "DR")))
    for sigma in map(int, args.sigmas.split(",")):
        for n in map(int, args.lengths.split(",")):
            S = [rng.randrange(sigma) for _ in range(n)]
            T = [rng.randrange(sigma) for _ in range(n)]
            cross = max(pair_stats(parikh(S, sigma), parikh(T, sigma)).cross_sum, 1)
            cols = []
            for fn in (adaptive_di, adaptive_dir, adaptive_dr):
                c = fn(S, T, AdaptiveContext.build(S, T, sigma)).counters
                cols.append(f"{c.recursive_calls / cross:12.2f} {c.cells_filled / cross:12.2f}")
            print(f"{sigma:5} {n:5} {cross:7}  " + "  ".join(cols))


if __name__ == "__main__":
    main()

"""Deterministic samples on sorted input.

The Knuth-style preset takes every sample from the front of the range and
doubles it each round (r^2 = 2).  On sorted input the front is the smallest
keys, the pivots land far below the median, and almost nothing is
discarded, so the comparison count explodes.  Random samples fix this.
"""

import argparse

from frselect import Params, RngStream, generate, select


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=50_000)
    args = ap.parse_args()
    n = args.n

    for family in ("random", "sorted"):
        for name, params in (("knuth", Params.knuth_emulation()), ("default", Params())):
            rng = RngStream(1)
            x = generate(family, n, rng)
            sel = select(x, (n + 1) // 2, params, rng=rng)
            print("%-7s %-8s C/n = %8.2f  depth %d"
                  % (family, name, sel.metrics.comparisons / n, sel.metrics.max_depth))


if __name__ == "__main__":
    main()

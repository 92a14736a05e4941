"""Select an order statistic and look at what it cost.

    python demos/basic_selection.py --n 1000000 --k 250000
"""

import argparse

from frselect import RngStream, generate, select
from frselect.core import f


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--k", type=int, default=None, help="rank (default: median)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    n = args.n
    k = (n + 1) // 2 if args.k is None else args.k
    rng = RngStream(args.seed)
    x = generate("random", n, rng)
    sel = select(x, k, rng=rng, trace=True)
    m = sel.metrics

    print("k=%d of n=%d -> %d" % (k, n, sel.value))
    print("comparisons      %d  (%.4f n)" % (m.comparisons, m.comparisons / n))
    print("lower bound      n + min(k, n-k) = %d" % (n + min(k, n - k)))
    print("excess / f(n)    %.2f" % ((m.comparisons - n - min(k, n - k)) / f(n)))
    print("sampled          %d keys (%.3f%% of n)" % (m.sampled, 100 * m.sampled / n))
    print("recursion depth  %d" % m.max_depth)
    print()
    print("top-level iterations:")
    print("  l      s     s+      gap   ranks        next ranks   cost")
    for rec in sel.trace:
        if rec.depth == 0:
            print("  %d %6d %7d %8.2f   %-12s %-12s %d"
                  % (rec.l, rec.s, rec.s_plus, rec.g, rec.ranks, rec.ranks_plus, rec.c))


if __name__ == "__main__":
    main()

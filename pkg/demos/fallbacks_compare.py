"""SELECT against its fallbacks on the same inputs.

quickselect (median of 3), PICK (median of medians) and the two
non-recursive SELECT variants, which solve the pivot subproblems with PICK
or by sorting.
"""

import argparse
import time

from frselect import CountingComparator, Params, RngStream, generate, pick_select, quickselect, select


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--family", default="random")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    n, k = args.n, (args.n + 1) // 2
    base = generate(args.family, n, RngStream(args.seed))

    def run_select(variant):
        return lambda x, cmp: select(x, k, Params(variant=variant), seed=args.seed, cmp=cmp).value

    methods = {
        "select": run_select("recursive"),
        "select/pick": run_select("nonrec-pick"),
        "select/sort": run_select("nonrec-sort"),
        "quickselect": lambda x, cmp: quickselect(x, k, RngStream(args.seed), cmp),
        "pick": lambda x, cmp: pick_select(x, k, cmp),
    }
    print("%-12s %8s %10s" % ("method", "C/n", "ms"))
    for name, fn in methods.items():
        cmp = CountingComparator()
        t0 = time.perf_counter()
        value = fn(base.copy(), cmp)
        ms = 1000 * (time.perf_counter() - t0)
        print("%-12s %8.3f %10.1f   value %d" % (name, cmp.count / n, ms, value))


if __name__ == "__main__":
    main()

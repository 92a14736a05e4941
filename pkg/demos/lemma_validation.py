"""Monte-Carlo check of the per-iteration failure probabilities.

Every traced iteration records whether the next lower pivot fell below the
current one, whether a pivot missed its bounding order statistic, whether
the partitioning cost exceeded its bound, and whether the searched zones
grew large.  Each frequency is compared against its closed-form bound with
a 3 sigma allowance.  A direct hypergeometric simulation checks the tail
inequality that all of these rest on.
"""

import argparse

from frselect import InputSpec, hypergeometric_check, validate_bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--k", type=int, default=None)
    args = ap.parse_args()

    rep = validate_bounds(InputSpec("random", args.n, args.k), trials=args.trials)
    for stat in rep.stats:
        print(stat.line())
    print("clamped rank events skipped: %d" % rep.clamp_skips)
    print("all within bounds" if rep.ok else "VIOLATIONS: %d" % len(rep.violations()))

    tail = hypergeometric_check()
    print("\nhypergeometric tail: freq %.5f  bound %.5f  %s"
          % (tail.frequency, tail.bound, "ok" if tail.ok else "VIOLATED"))


if __name__ == "__main__":
    main()

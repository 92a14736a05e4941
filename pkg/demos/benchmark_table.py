"""Performance table for the four input families at desk-scale sizes.

Prints the columns C/n (avg, max, min), gamma_avg, partitioned mass,
partition and small-select counts and sample size.  Sizes above 2M only run
with --large.

    python demos/benchmark_table.py --trials 20
"""

import argparse

from frselect import InputSpec, run_experiment
from frselect.tables import emit_table

SIZES = [50_000, 100_000, 500_000, 1_000_000, 2_000_000]
LARGE = [4_000_000, 8_000_000, 16_000_000]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--large", action="store_true", help="add the 4M-16M rows")
    ap.add_argument("--families", nargs="+",
                    default=["random", "onezero", "sorted", "organpipe"])
    args = ap.parse_args()

    sizes = SIZES + (LARGE if args.large else [])
    reports = []
    for family in args.families:
        for n in sizes:
            reports.append(run_experiment(InputSpec(family, n), trials=args.trials,
                                          master_seed=args.seed))
    print(emit_table(reports, "table"), end="")
    print("\nEvery row was checked against np.partition on every trial.")


if __name__ == "__main__":
    main()

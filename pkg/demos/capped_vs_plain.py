"""Why the sample sizes are capped.

With the plain schedule s_1 = sqrt(n) and each sample is r^2 = 144 times the
previous one, so at n = 10^6 the last proper sample holds 144000 keys.  The
capped schedule shrinks s_1 so that the last proper sample is just above
n / r^2, which keeps the sampled share under 1% for a small rise in
comparisons.
"""

import argparse

from frselect import InputSpec, Params, run_experiment, schedule_capped, schedule_plain


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--trials", type=int, default=10)
    args = ap.parse_args()
    n = args.n

    print("plain  sizes", schedule_plain(n).sizes)
    print("capped sizes", schedule_capped(n).sizes)
    print()
    presets = {"capped": Params(), "plain": Params(eta_bar=1.000001 / 144)}
    print("%-7s %8s %8s %10s" % ("", "C/n", "gamma", "s [%n]"))
    for name, params in presets.items():
        rep = run_experiment(InputSpec("random", n), params, args.trials)
        print("%-7s %8.4f %8.2f %10.3f" % (name, rep.c_avg, rep.gamma_avg, rep.s_avg))


if __name__ == "__main__":
    main()

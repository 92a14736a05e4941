"""selectbench: run seeded selection benchmarks and print one table row per input.

Example:
    selectbench run --family random onezero --n 100000 1000000 --trials 20
"""

import argparse
import sys

from .bench import Family, InputSpec, OracleMismatch, run_experiment
from .bounds import summarize
from .core import GapMode, Params, Variant, validate_params
from .tables import emit_table

LARGE_N = 2_000_000

EXIT_MISMATCH = 1
EXIT_BOUNDS = 3


def _rank(text):
    if text == "median":
        return None
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'median'")
    if k < 1:
        raise argparse.ArgumentTypeError("k must be >= 1")
    return k


def _eta_bar(text):
    if text == "auto":
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a float or 'auto'")


def build_parser():
    parser = argparse.ArgumentParser(prog="selectbench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="benchmark SELECT on generated inputs")
    run.add_argument("--family", nargs="+", default=["random"],
                     choices=[f.value for f in Family])
    run.add_argument("--n", nargs="+", type=int, default=[1_000_000])
    run.add_argument("--k", type=_rank, default=None, metavar="INT|median",
                     help="rank to select (default: median, i.e. ceil(n/2))")
    run.add_argument("--trials", type=int, default=20)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--variant", default="recursive", choices=[v.value for v in Variant])
    run.add_argument("--gap", default="sqrt-s", choices=[g.value for g in GapMode])
    run.add_argument("--alpha", type=float, default=0.5)
    run.add_argument("--beta", type=float, default=0.3)
    run.add_argument("--r2", type=int, default=144)
    run.add_argument("--eta-bar", type=_eta_bar, default=None, metavar="F|auto")
    run.add_argument("--ncut", type=int, default=600)
    run.add_argument("--no-randomize", action="store_true",
                     help="take samples from the front of the range (deterministic)")
    run.add_argument("--format", default="csv", choices=["csv", "table"])
    run.add_argument("--no-time", action="store_true",
                     help="zero the wall-clock columns for reproducible output")
    run.add_argument("--trace", action="store_true",
                     help="record per-iteration traces (written to stderr)")
    run.add_argument("--validate-bounds", action="store_true",
                     help="check traced event frequencies against their bounds")
    run.add_argument("--large", action="store_true",
                     help="allow n above %d" % LARGE_N)
    run.add_argument("--workers", type=int, default=None,
                     help="worker processes (default: $SELECTBENCH_THREADS or 1)")
    run.add_argument("--out", default=None, help="write the table here instead of stdout")
    return parser


def _params(args):
    return Params(alpha=args.alpha, beta=args.beta, r2=args.r2, eta_bar=args.eta_bar,
                  n_cut=args.ncut, gap_mode=args.gap, variant=args.variant,
                  randomized_sampling=not args.no_randomize)


def _dump_trace(report, out):
    out.write("# trace %s n=%d\n" % (report.spec.family.value, report.n))
    out.write("trial,depth,l,l_bar,n,s,s_plus,g,c,c_bar,shat,u_clamped,v_clamped\n")
    for rec in report.records:
        for t in rec.trace:
            out.write("%d,%d,%d,%d,%d,%d,%d,%.4f,%d,%.2f,%d,%d,%d\n"
                      % (rec.trial, t.depth, t.l, t.l_bar, t.n, t.s, t.s_plus, t.g,
                         t.c, t.c_bar, t.shat, t.u_clamped, t.v_clamped))


def cmd_run(args, parser):
    params = _params(args)
    errors = validate_params(params)
    if errors:
        parser.error("; ".join(errors))
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    for n in args.n:
        if n < 1:
            parser.error("--n must be >= 1")
        if n > LARGE_N and not args.large:
            parser.error("n=%d needs --large" % n)
        if args.k is not None and args.k > n:
            parser.error("--k %d exceeds n=%d" % (args.k, n))
    trace = args.trace or args.validate_bounds
    reports = []
    violated = False
    try:
        for family in args.family:
            for n in args.n:
                spec = InputSpec(Family(family), n, args.k)
                report = run_experiment(spec, params, args.trials, args.seed,
                                        trace=trace, workers=args.workers)
                reports.append(report)
                if args.trace:
                    _dump_trace(report, sys.stderr)
                if args.validate_bounds:
                    bounds = summarize([r.trace for r in report.records], params)
                    sys.stderr.write("# bounds %s n=%d (%d clamped rank events skipped)\n"
                                     % (family, n, bounds.clamp_skips))
                    for stat in bounds.stats:
                        sys.stderr.write(stat.line() + "\n")
                    violated |= not bounds.ok
    except OracleMismatch as exc:
        sys.stderr.write("oracle mismatch: %s\n" % exc)
        return EXIT_MISMATCH
    text = emit_table(reports, args.format, no_time=args.no_time)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if violated:
        sys.stderr.write("bound violated beyond 3 sigma\n")
        return EXIT_BOUNDS
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return cmd_run(args, parser)
    return 2


if __name__ == "__main__":
    sys.exit(main())

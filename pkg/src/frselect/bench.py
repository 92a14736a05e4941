"""Benchmark inputs, the trial runner and aggregated reports."""

import enum
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import Metrics, Params, f
from .engine import select
from .rng import RngStream


class Family(enum.Enum):
    RANDOM = "random"
    ONEZERO = "onezero"
    SORTED = "sorted"
    ORGANPIPE = "organpipe"


class OracleMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class InputSpec:
    family: Family
    n: int
    k: int = None  # None selects the lower median ceil(n/2)

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.k is not None and not 1 <= self.k <= self.n:
            raise ValueError("k=%d outside 1..%d" % (self.k, self.n))

    @property
    def rank(self):
        return (self.n + 1) // 2 if self.k is None else self.k


def generate(family, n, rng=None):
    """Benchmark input of size ``n`` as an int64 array.

    random     permutation of 1..n
    onezero    ceil(n/2) ones and floor(n/2) zeros in random order
    sorted     1..n ascending
    organpipe  1, 2, ..., ceil(n/2), floor(n/2), ..., 2, 1
               (for even n this is 1..n/2 followed by n/2..1)
    """
    family = Family(family)
    if n < 1:
        raise ValueError("n must be positive")
    if family is Family.RANDOM:
        x = np.arange(1, n + 1, dtype=np.int64)
        rng.shuffle(x)
    elif family is Family.ONEZERO:
        x = np.zeros(n, dtype=np.int64)
        x[:(n + 1) // 2] = 1
        rng.shuffle(x)
    elif family is Family.SORTED:
        x = np.arange(1, n + 1, dtype=np.int64)
    else:
        x = np.concatenate([np.arange(1, (n + 1) // 2 + 1, dtype=np.int64),
                            np.arange(n // 2, 0, -1, dtype=np.int64)])
    return x


@dataclass
class TrialRecord:
    trial: int
    value: int
    metrics: Metrics
    time_ms: float
    trace: list = None


@dataclass
class TrialReport:
    """Per-trial records for one input spec plus the derived table columns."""

    spec: InputSpec
    params: Params
    records: list = field(default_factory=list)

    @property
    def n(self):
        return self.spec.n

    def _ratios(self):
        return [r.metrics.comparisons / self.n for r in self.records]

    @property
    def c_avg(self):
        return float(np.mean(self._ratios()))

    @property
    def c_max(self):
        return max(self._ratios())

    @property
    def c_min(self):
        return min(self._ratios())

    def _mean(self, name):
        return float(np.mean([getattr(r.metrics, name) for r in self.records]))

    @property
    def gamma_avg(self):
        return (self._mean("comparisons") - 1.5 * self.n) / f(self.n)

    @property
    def l_avg(self):
        """Average partitioned mass in multiples of n."""
        return self._mean("partition_mass") / self.n

    @property
    def p_avg_ln(self):
        """Average SELECT partitioning steps in multiples of ln n."""
        return self._mean("select_partitions") / math.log(self.n)

    @property
    def n_avg_ln(self):
        """Average small-select calls in multiples of ln n."""
        return self._mean("sselect_calls") / math.log(self.n)

    @property
    def p_avg(self):
        """Small-select partitions per small-select call."""
        calls = sum(r.metrics.sselect_calls for r in self.records)
        parts = sum(r.metrics.sselect_partitions for r in self.records)
        return parts / calls if calls else 0.0

    @property
    def s_avg(self):
        """Average sampled elements in percent of n."""
        return 100.0 * self._mean("sampled") / self.n

    @property
    def times(self):
        return [r.time_ms for r in self.records]

    def row(self):
        t = self.times
        return {
            "input": self.spec.family.value, "n": self.n,
            "time_avg": float(np.mean(t)), "time_max": max(t), "time_min": min(t),
            "c_avg": self.c_avg, "c_max": self.c_max, "c_min": self.c_min,
            "gamma_avg": self.gamma_avg, "l_avg": self.l_avg,
            "p_avg_ln": self.p_avg_ln, "n_avg_ln": self.n_avg_ln,
            "p_avg": self.p_avg, "s_avg": self.s_avg,
        }


def run_trial(spec, params, master_seed, trial, trace=False):
    """One oracle-checked selection on a freshly generated input."""
    rng = RngStream(master_seed, trial)
    x = generate(spec.family, spec.n, rng)
    k = spec.rank
    expected = np.partition(x, k - 1)[k - 1]
    t0 = time.perf_counter()
    sel = select(x, k, params, rng=rng, trace=trace)
    elapsed = (time.perf_counter() - t0) * 1000.0
    if sel.value != expected:
        raise OracleMismatch("%s n=%d k=%d trial %d: got %r, expected %r"
                             % (spec.family.value, spec.n, k, trial, sel.value, expected))
    return TrialRecord(trial, sel.value, sel.metrics, elapsed, sel.trace)


def _run_trial_args(args):
    return run_trial(*args)


def default_workers():
    try:
        return max(1, int(os.environ.get("SELECTBENCH_THREADS", "1")))
    except ValueError:
        return 1


def run_experiment(spec, params=None, trials=20, master_seed=0, trace=False, workers=None):
    """Run ``trials`` independent trials; trial ``i`` uses stream ``(master_seed, i)``.

    Results do not depend on ``workers`` or on completion order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    params = Params() if params is None else params
    workers = default_workers() if workers is None else workers
    jobs = [(spec, params, master_seed, i, trace) for i in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=min(workers, trials)) as pool:
            records = list(pool.map(_run_trial_args, jobs))
    else:
        records = [_run_trial_args(job) for job in jobs]
    records.sort(key=lambda r: r.trial)
    return TrialReport(spec, params, records)

"""Monte-Carlo checks of the per-iteration probability bounds.

Each traced SELECT iteration carries six event flags (see
:class:`~frselect.core.IterationTrace`).  For every event the population
frequency is bounded in closed form; here the empirical frequency over many
seeded runs is compared against the average bound, with a 3 sigma binomial
allowance.
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .bench import run_experiment
from .core import GapMode
from .rng import RngStream, _below
from .schedule import p_fail

SLACK_SIGMAS = 3.0


@dataclass
class EventStat:
    group: str
    l: int
    event: str
    applicable: int
    hits: int
    bound: float

    @property
    def frequency(self):
        return self.hits / self.applicable if self.applicable else 0.0

    @property
    def sigma(self):
        if not self.applicable:
            return 0.0
        b = min(self.bound, 1.0)
        return math.sqrt(b * (1.0 - b) / self.applicable)

    @property
    def ok(self):
        return self.frequency <= self.bound + SLACK_SIGMAS * self.sigma

    def line(self):
        return ("%-6s l=%d %-15s n=%6d hits=%5d freq=%.5f bound=%.5f (+3s %.5f) %s"
                % (self.group, self.l, self.event, self.applicable, self.hits,
                   self.frequency, self.bound, self.bound + SLACK_SIGMAS * self.sigma,
                   "ok" if self.ok else "VIOLATED"))


@dataclass
class BoundReport:
    stats: list
    clamp_skips: int

    @property
    def ok(self):
        return all(s.ok for s in self.stats)

    def violations(self):
        return [s for s in self.stats if not s.ok]


def _tail(dev, s):
    """exp(-2 dev**2 / s) for dev >= 0, else the trivial bound 1."""
    return math.exp(-2.0 * dev * dev / s) if dev > 0.0 else 1.0


def iteration_bounds(rec, params):
    """Closed-form bounds for the events of one traced iteration."""
    s, s_plus, g = rec.s, rec.s_plus, rec.g
    # deviation left after the next gap is rescaled to the current sample
    shift = g - rec.g_plus * s / s_plus
    rank_bound = _tail(shift, s)
    bracket_bound = _tail(g, s)
    mode = params.gap_mode
    if mode is GapMode.KNUTH or s < 2 or g <= 0.0:
        fail = min(1.0, 2.0 * bracket_bound + 2.0 * rank_bound)
    else:
        fail = p_fail(params.beta, params.kappa, rec.n if mode is GapMode.SQRT_N else s, mode)
    return {
        "u_plus_below_u": rank_bound,
        "u_below_z_ju": bracket_bound,
        "v_below_v_plus": rank_bound,
        "z_jv_below_v": bracket_bound,
        "cost_large": bracket_bound,
        "shat_large": fail,
        "cost_or_shat": fail,
    }


EVENTS = ("u_plus_below_u", "u_below_z_ju", "v_below_v_plus", "z_jv_below_v",
          "cost_large", "shat_large", "cost_or_shat")


def summarize(traces, params):
    """Fold per-trial trace lists into per-(group, l, event) statistics.

    Top-level iterations form group ``top``; iterations of nested SELECT
    calls are pooled by ``l`` into group ``nested``.  Rank events whose
    ranks were clamped are skipped, as their bound does not apply.
    """
    acc = {}
    skips = 0
    for trace in traces:
        for rec in trace:
            group = "top" if rec.depth == 0 else "nested"
            bounds = iteration_bounds(rec, params)
            flags = dict(rec.events)
            flags["cost_large"] = rec.c >= rec.c_bar
            for event in EVENTS:
                if event == "u_plus_below_u" and rec.u_clamped:
                    skips += 1
                    continue
                if event == "v_below_v_plus" and rec.v_clamped:
                    skips += 1
                    continue
                key = (group, rec.l, event)
                entry = acc.setdefault(key, [0, 0, 0.0])
                entry[0] += 1
                entry[1] += bool(flags[event])
                entry[2] += bounds[event]
    stats = [EventStat(g, l, e, a, h, b / a)
             for (g, l, e), (a, h, b) in sorted(acc.items(),
                                                key=lambda kv: (kv[0][0] != "top", kv[0][1],
                                                                EVENTS.index(kv[0][2])))]
    return BoundReport(stats, skips)


def validate_bounds(spec, params=None, trials=1000, master_seed=0, workers=None):
    """Run traced trials and check every event frequency against its bound."""
    report = run_experiment(spec, params, trials, master_seed, trace=True, workers=workers)
    return summarize([r.trace for r in report.records], report.params)


@njit(cache=True)
def _hypergeometric_draws(total, red, draws, resamples, state):
    balls = np.zeros(total, dtype=np.int64)
    balls[:red] = 1
    counts = np.empty(resamples, dtype=np.int64)
    for t in range(resamples):
        got = 0
        for i in range(draws):
            state, j = _below(state, total - i)
            j += i
            tmp = balls[i]
            balls[i] = balls[j]
            balls[j] = tmp
            got += balls[i]
        counts[t] = got
    return counts, state


@dataclass
class TailCheck:
    frequency: float
    bound: float
    sigma: float
    resamples: int

    @property
    def ok(self):
        return self.frequency <= self.bound + SLACK_SIGMAS * self.sigma


def hypergeometric_check(total=100, red=50, draws=30, g=5.0, resamples=100_000, seed=0):
    """Simulated P[red drawn >= p*draws + g] against exp(-2 g**2 / draws)."""
    rng = RngStream(seed)
    counts, state = _hypergeometric_draws(total, red, draws, resamples, np.uint64(rng.state))
    rng.state = int(state)
    threshold = red / total * draws + g
    freq = float(np.mean(counts >= threshold))
    bound = math.exp(-2.0 * g * g / draws)
    sigma = math.sqrt(bound * (1.0 - bound) / resamples)
    return TailCheck(freq, bound, sigma, resamples)


__all__ = ["BoundReport", "EventStat", "TailCheck", "hypergeometric_check",
           "iteration_bounds", "summarize", "validate_bounds"]

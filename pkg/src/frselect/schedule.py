"""Sample-size schedules, rank gaps, pivot ranks and failure bounds.

Everything here is plain arithmetic on integers and binary64 floats; ceilings
are taken directly on the floating values.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import GapMode, ScheduleMode


class RankPair(NamedTuple):
    i_u: int
    i_v: int


class BoundingPair(NamedTuple):
    j_u: int
    j_v: int


@dataclass(frozen=True)
class Schedule:
    """Nested sample sizes ``s_1 < ... < s_{l_bar} < s_{l_bar+1} = n``."""

    n: int
    sizes: tuple
    capped: bool = False

    @property
    def l_bar(self):
        return len(self.sizes) - 1

    @property
    def s1(self):
        return self.sizes[0]

    @property
    def sampled(self):
        """Size of the largest proper sample, s_{l_bar}."""
        return self.sizes[-2]


def gap(s, n, theta, beta, mode=GapMode.SQRT_S, final=False):
    """Rank gap for a sample of size ``s`` drawn from ``n`` elements.

    ``final`` marks the last iteration, where the sample is the whole set and
    the gap is zero.
    """
    if final:
        return 0.0
    mode = GapMode(mode)
    if mode is GapMode.SQRT_N:
        return math.sqrt(beta * s * math.log(n))
    if s < 2:
        raise ValueError("gap mode %s needs s >= 2, got s=%d" % (mode.value, s))
    if mode is GapMode.SQRT_S:
        return math.sqrt(beta * s * math.log(s))
    return math.sqrt(min(theta, 1.0 - theta) * s * math.log(s))


def pivot_ranks(theta, s, g):
    """Ranks in a sample of size ``s`` bracketing the target fraction ``theta``."""
    t = theta * s
    return RankPair(max(math.ceil(t - g), 1), min(math.ceil(t + g), s))


def bounding_ranks(theta, s, s_plus, g):
    """Ranks in the next sample expected to enclose the current pivots."""
    t = theta * s_plus
    w = 2.0 * g * s_plus / s
    return BoundingPair(max(math.ceil(t - w), 1), min(math.ceil(t + w), s_plus))


def _ceil_root(n, alpha):
    if alpha == 0.5:
        r = math.isqrt(n)
        return r if r * r == n else r + 1
    return math.ceil(n ** alpha)


def _grow(n, s1, r2):
    sizes = [s1]
    while sizes[-1] < n:
        sizes.append(min(r2 * sizes[-1], n))
    return tuple(sizes)


def schedule_plain(n, alpha=0.5, r2=144):
    """``s_1 = min(ceil(n**alpha), n-1)`` followed by ``s_{l+1} = min(r2 s_l, n)``."""
    if n < 2:
        raise ValueError("schedules need n >= 2")
    s1 = min(_ceil_root(n, alpha), n - 1)
    return Schedule(n, _grow(n, s1, r2), capped=False)


def capped_threshold(alpha, r2, eta_bar):
    """Smallest size from which the capped schedule is used."""
    denom = eta_bar * r2 - 1.0
    if denom <= 0.0:
        return math.inf
    return max((r2 / denom) ** (1.0 / alpha), 3.0)


def schedule_capped(n, alpha=0.5, r2=144, eta_bar=None):
    """Schedule keeping the last proper sample below ``eta_bar * n``.

    Falls back to :func:`schedule_plain` below :func:`capped_threshold`.
    """
    if eta_bar is None:
        eta_bar = min(2.0 / r2, 1.0)
    if n < capped_threshold(alpha, r2, eta_bar):
        return schedule_plain(n, alpha, r2)
    l_bar = 1
    if alpha == 0.5:
        while (r2 ** l_bar) ** 2 < n:
            l_bar += 1
    else:
        while r2 ** l_bar * n ** alpha < n:
            l_bar += 1
    s1 = -(-n // r2 ** l_bar)
    sched = Schedule(n, _grow(n, s1, r2), capped=True)
    assert sched.l_bar == l_bar and s1 < n, "capped schedule out of shape"
    assert sched.sampled < (1.0 / r2 + n ** -alpha) * n, "capped schedule samples too much"
    return sched


def make_schedule(n, params):
    if params.schedule_mode is ScheduleMode.CAPPED:
        return schedule_capped(n, params.alpha, params.r2, params.eta_bar)
    return schedule_plain(n, params.alpha, params.r2)


def psi(s, kappa):
    """Small-gap replacement for (1 - kappa)**2; zero when the bracket goes negative."""
    ln_r2 = -2.0 * math.log(kappa)
    inner = 1.0 - kappa * math.sqrt(1.0 + ln_r2 / math.log(s))
    return inner * inner if inner > 0.0 else 0.0


def p_fail(beta, kappa, m, mode=GapMode.SQRT_S):
    """Failure probability bound for one iteration, clamped to 1.

    ``m`` is ``n`` for sqrt-n gaps and the sample size ``s`` otherwise.  Knuth
    gaps share the sqrt-s shape, with ``beta`` standing for min(theta, 1-theta).
    """
    mode = GapMode(mode)
    if mode is GapMode.SQRT_N:
        factor = (1.0 - kappa) ** 2
    else:
        factor = psi(m, kappa)
    value = 2.0 * m ** (-2.0 * beta) + 2.0 * m ** (-2.0 * beta * factor)
    return min(value, 1.0)


def partition_cost_bound(theta, s, s_plus, g):
    """Comparison threshold for one partitioning step."""
    return (1.0 + min(theta, 1.0 - theta)) * (s_plus - s) + 3.0 * g * s_plus / s

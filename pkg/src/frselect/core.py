"""Counting comparator, tunable parameters and run metrics."""

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np


class RankError(IndexError):
    """Rank outside 1..n (or an empty input)."""


class CountingComparator:
    """The only way the selection routines look at keys.

    Each three-way comparison (less / equal / greater) costs exactly one unit
    of :attr:`count`, whether it is issued singly through :meth:`compare` or
    as part of a batch through :meth:`compare_to` / :meth:`compare_pairs`.
    Batches are purely a speed device: a batch of ``m`` comparisons is
    charged ``m``, the same as ``m`` scalar calls.
    """

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def compare(self, a, b):
        """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
        self.count += 1
        return int(a > b) - int(a < b)

    def compare_to(self, xs, pivot):
        """Compare every element of ``xs`` against ``pivot``; int8 signs."""
        self.count += len(xs)
        return (xs > pivot).view(np.int8) - (xs < pivot).view(np.int8)

    def compare_pairs(self, xs, ys):
        """Elementwise three-way comparison of two equal-length arrays."""
        self.count += len(xs)
        return (xs > ys).view(np.int8) - (xs < ys).view(np.int8)

    def reset(self):
        self.count = 0

    def __repr__(self):
        return "CountingComparator(count=%d)" % self.count


class GapMode(enum.Enum):
    SQRT_N = "sqrt-n"  # (beta * s * ln n) ** 0.5
    SQRT_S = "sqrt-s"  # (beta * s * ln s) ** 0.5
    KNUTH = "knuth"  # (min(theta, 1 - theta) * s * ln s) ** 0.5


class ScheduleMode(enum.Enum):
    PLAIN = "plain"
    CAPPED = "capped"


class Variant(enum.Enum):
    RECURSIVE = "recursive"
    NONREC_PICK = "nonrec-pick"
    NONREC_SORT = "nonrec-sort"
    QUICKSELECT = "quickselect"


@dataclass(frozen=True)
class Params:
    """Tunables of SELECT.  Defaults are the experimental preset
    (alpha=1/2, beta=0.3, r=12, eta_bar=2/r**2, n_cut=600, small gaps,
    capped schedule).

    ``eta_bar=None`` means ``2 / r2`` (capped at 1).
    """

    alpha: float = 0.5
    beta: float = 0.3
    r2: int = 144
    eta_bar: float = None
    n_cut: int = 600
    gap_mode: GapMode = GapMode.SQRT_S
    schedule_mode: ScheduleMode = ScheduleMode.CAPPED
    variant: Variant = Variant.RECURSIVE
    single_pivot_reset: bool = True
    restart_on_large_shat: bool = False
    randomized_sampling: bool = True
    independent_initial_selects: bool = False

    def __post_init__(self):
        if self.eta_bar is None:
            object.__setattr__(self, "eta_bar", min(2.0 / self.r2, 1.0))
        for name, kind in (("gap_mode", GapMode), ("schedule_mode", ScheduleMode),
                           ("variant", Variant)):
            value = getattr(self, name)
            if not isinstance(value, kind):
                object.__setattr__(self, name, kind(value))

    @property
    def r(self):
        return math.sqrt(self.r2)

    @property
    def kappa(self):
        return 1.0 / math.sqrt(self.r2)

    @property
    def beta_min(self):
        """Lower limit on beta for the large-gap analysis, (1 - kappa)**-2 / 4."""
        return 0.25 / (1.0 - self.kappa) ** 2

    def with_(self, **changes):
        return replace(self, **changes)

    @classmethod
    def knuth_emulation(cls, **changes):
        """Knuth-style gaps with r**2 = 2 and prefix samples instead of random ones."""
        base = dict(gap_mode=GapMode.KNUTH, r2=2, eta_bar=1.0,
                    randomized_sampling=False)
        base.update(changes)
        return cls(**base)


def validate_params(p):
    """Return the list of violated parameter constraints (empty when valid)."""
    errors = []
    if not 0.0 < p.alpha <= 0.5:
        errors.append("alpha must lie in (0, 1/2], got %r" % p.alpha)
    if not p.beta > 0.0:
        errors.append("beta must be positive, got %r" % p.beta)
    if not (isinstance(p.r2, (int, np.integer)) and p.r2 >= 2):
        errors.append("r2 must be an integer >= 2, got %r" % (p.r2,))
        return errors
    if not 1.0 / p.r2 < p.eta_bar <= 1.0:
        errors.append("eta_bar must lie in (1/r2, 1], got %r" % p.eta_bar)
    if not (isinstance(p.n_cut, (int, np.integer)) and p.n_cut >= 1):
        errors.append("n_cut must be a positive integer, got %r" % (p.n_cut,))
    if p.gap_mode is GapMode.SQRT_N and p.beta < p.beta_min:
        errors.append("beta=%r below (1-kappa)**-2/4 = %.6f required by sqrt-n gaps"
                      % (p.beta, p.beta_min))
    if p.gap_mode is GapMode.SQRT_S and p.beta <= p.beta_min:
        errors.append("beta=%r must exceed (1-kappa)**-2/4 = %.6f for sqrt-s gaps"
                      % (p.beta, p.beta_min))
    if p.restart_on_large_shat and not p.randomized_sampling:
        errors.append("restart_on_large_shat needs randomized sampling "
                      "(a deterministic restart repeats itself forever)")
    return errors


def check_params(p):
    errors = validate_params(p)
    if errors:
        raise ValueError("invalid parameters: " + "; ".join(errors))


def f(n):
    """Second-order scale (n ln n) ** 0.5."""
    return math.sqrt(n * math.log(n)) if n > 1 else 0.0


@dataclass
class Metrics:
    """Counters for one selection run (all recursion levels included).

    ``partition_mass`` is the total number of elements fed to partitioning
    passes: staged elements in every SELECT partitioning step plus the
    ranges of every small-select, quickselect or PICK partition.
    ``sampled`` adds, for every SELECT invocation, the size of its largest
    proper sample.
    """

    comparisons: int = 0
    partition_mass: int = 0
    select_partitions: int = 0
    sselect_calls: int = 0
    sselect_partitions: int = 0
    sampled: int = 0
    restarts: int = 0
    max_depth: int = 0

    @property
    def partitions_per_sselect(self):
        return self.sselect_partitions / self.sselect_calls if self.sselect_calls else 0.0

    def gamma(self, n):
        """(C - 1.5 n) / f(n)."""
        return (self.comparisons - 1.5 * n) / f(n)

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass
class IterationTrace:
    """One SELECT partitioning step, with the oracle-derived event flags."""

    depth: int
    l: int
    l_bar: int
    n: int
    s: int
    s_plus: int
    theta: float
    g: float
    g_plus: float
    ranks: tuple
    ranks_plus: tuple
    bounding: tuple
    c: int
    c_bar: float
    shat: int
    u_clamped: bool
    v_clamped: bool
    events: dict = field(default_factory=dict)

"""The nested-sample, two-pivot SELECT.

Layout invariant of one invocation on ``arr[lo:hi]`` after iteration ``l``::

    arr[lo:lo+s]   current sample S_l as  L | U | M | V | R
    arr[lo+s:hi]   elements not yet sampled

with ``L < u``, ``U == u``, ``u < M < v``, ``V == v`` and ``R > v``.  When the
two pivots coincide only ``L | U | R`` is present.  Pivot selection needs no
comparisons to rebuild the zones, because every sub-selection leaves its
range arranged as ``< x | = x | > x`` and reports the ``= x`` block.
"""

import math
import sys
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import (CountingComparator, GapMode, IterationTrace, Metrics, Params,
                   RankError, Variant, check_params)
from .fallbacks import (Work, _as_array, pick_block, quickselect_block,
                        sort_range, sorted_block)
from .rng import RngStream
from .schedule import (bounding_ranks, gap, make_schedule, partition_cost_bound,
                       pivot_ranks)

ZONES = ("L", "U", "M", "V", "R")
_OPEN, _EQ, _SORTED = 0, 1, 2


class Selection(NamedTuple):
    value: object
    index: int
    metrics: Metrics
    trace: list


@dataclass(frozen=True)
class ZoneLayout:
    """Zone sizes of a sample stored at ``arr[lo:lo+size]``."""

    lo: int
    n_l: int
    n_u: int
    n_m: int = 0
    n_v: int = 0
    n_r: int = 0
    single: bool = False

    @property
    def size(self):
        return self.n_l + self.n_u + self.n_m + self.n_v + self.n_r

    @property
    def u_block(self):
        a = self.lo + self.n_l
        return a, a + self.n_u

    @property
    def v_block(self):
        if self.single:
            return self.u_block
        b = self.lo + self.n_l + self.n_u + self.n_m
        return b, b + self.n_v

    def counts(self):
        return dict(zip(ZONES, (self.n_l, self.n_u, self.n_m, self.n_v, self.n_r)))

    def segments(self):
        """``[start, end, kind, zone]`` for the nonempty zones, in order."""
        segs = []
        start = self.lo
        kinds = (_OPEN, _EQ, _OPEN, _EQ, _OPEN)
        for zone, size, kind in zip(ZONES, (self.n_l, self.n_u, self.n_m, self.n_v, self.n_r), kinds):
            if size:
                segs.append([start, start + size, kind, zone])
                start += size
        return segs

    @classmethod
    def from_blocks(cls, lo, size, u_block, v_block):
        (a0, a1), (b0, b1) = u_block, v_block
        if (a0, a1) == (b0, b1):
            return cls(lo, a0 - lo, a1 - a0, 0, 0, lo + size - a1, single=True)
        return cls(lo, a0 - lo, a1 - a0, b0 - a1, b1 - b0, lo + size - b1)


def zone_of_rank(layout, i):
    """Zone holding the i-th smallest sample element and the rank inside it."""
    pos = layout.lo + i - 1
    for start, end, _, zone in layout.segments():
        if start <= pos < end:
            return zone, pos - start + 1
    raise AssertionError("rank %d outside a sample of %d" % (i, layout.size))


def extend_sample(arr, lo, s, s_plus, hi, rng, randomized=True):
    """Stage ``s_plus - s`` unsampled elements at ``arr[lo+s:lo+s_plus]``.

    Draws uniformly without replacement from ``arr[lo+s:hi]``; the final
    extension takes the whole tail, and without randomization the next
    contiguous block is used as is.  No comparisons.
    """
    if randomized and lo + s_plus < hi:
        rng.stage(arr, lo + s, hi, s_plus - s)
    return lo + s, lo + s_plus


def partition_step(arr, layout, s_plus, u, v, theta, cmp):
    """Classify the staged ``arr[lo+s:lo+s_plus]`` against the pivots and
    regroup ``arr[lo:lo+s_plus]`` into zones.

    Only staged elements are compared.  For ``theta < 1/2`` each is compared
    with ``v`` first and with ``u`` only when below ``v``; otherwise ``u``
    goes first.  Coinciding pivots cost one comparison per element.
    Returns the new layout and the number of comparisons spent.
    """
    lo, s = layout.lo, layout.size
    start = cmp.count
    staged = arr[lo + s:lo + s_plus]
    empty = staged[:0]
    if layout.single:
        sg = cmp.compare_to(staged, u)
        new = (staged[sg < 0], staged[sg == 0], empty, empty, staged[sg > 0])
    elif theta < 0.5:
        sv = cmp.compare_to(staged, v)
        below = staged[sv < 0]
        su = cmp.compare_to(below, u)
        new = (below[su < 0], below[su == 0], below[su > 0], staged[sv == 0], staged[sv > 0])
    else:
        su = cmp.compare_to(staged, u)
        above = staged[su > 0]
        sv = cmp.compare_to(above, v)
        new = (staged[su < 0], staged[su == 0], above[sv < 0], above[sv == 0], above[sv > 0])
    sizes = (layout.n_l, layout.n_u, layout.n_m, layout.n_v, layout.n_r)
    parts = []
    pos = lo
    for size, extra in zip(sizes, new):
        parts.append(arr[pos:pos + size])
        parts.append(extra)
        pos += size
    arr[lo:lo + s_plus] = np.concatenate(parts)
    n_l, n_u, n_m, n_v, n_r = (size + len(extra) for size, extra in zip(sizes, new))
    return ZoneLayout(lo, n_l, n_u, n_m, n_v, n_r, layout.single), cmp.count - start


def small_select(arr, lo, hi, k, cmp, rng=None, metrics=None):
    """Cut-off routine: median-of-3 fat-pivot quickselect on ``arr[lo:hi]``."""
    work = Work()
    block = quickselect_block(arr, lo, hi, k, cmp, rng, work)
    if metrics is not None:
        metrics.sselect_calls += 1
        metrics.sselect_partitions += work.partitions
        metrics.partition_mass += work.mass
    return block


class _Selector:
    def __init__(self, arr, params, rng, cmp, trace=False):
        self.arr = arr
        self.params = params
        self.rng = rng
        self.cmp = cmp
        self.metrics = Metrics()
        self.trace = [] if trace else None
        self.nonrec = params.variant in (Variant.NONREC_PICK, Variant.NONREC_SORT)

    def run(self, k):
        n = len(self.arr)
        if self.params.variant is Variant.QUICKSELECT:
            work = Work()
            block = quickselect_block(self.arr, 0, n, k, self.cmp, self.rng, work)
            self.metrics.select_partitions += work.partitions
            self.metrics.partition_mass += work.mass
            return block
        return self.select(0, n, k, 0)

    # -- rank arithmetic -------------------------------------------------

    def gap(self, s, n, theta):
        p = self.params
        if s < 2 and p.gap_mode is not GapMode.SQRT_N:
            return 0.0
        return gap(s, n, theta, p.beta, p.gap_mode)

    def ranks(self, theta, s, g):
        i_u, i_v = pivot_ranks(theta, s, g)
        if self.params.single_pivot_reset:
            if theta <= g / s:
                i_u = i_v
            elif 1.0 < theta + g / s:
                i_v = i_u
        return i_u, i_v

    # -- main loop -------------------------------------------------------

    def select(self, lo, hi, k, depth):
        n = hi - lo
        metrics = self.metrics
        metrics.max_depth = max(metrics.max_depth, depth)
        if n <= self.params.n_cut:
            return small_select(self.arr, lo, hi, k, self.cmp, self.rng, metrics)
        p = self.params
        theta = k / n
        sizes = make_schedule(n, p).sizes
        l_bar = len(sizes) - 1
        assert sizes[0] < n
        while True:
            metrics.sampled += sizes[-2]
            s = sizes[0]
            extend_sample(self.arr, lo, 0, s, hi, self.rng, p.randomized_sampling)
            g = self.gap(s, n, theta)
            i_u, i_v = self.ranks(theta, s, g)
            layout = self.select_initial_pivots(lo, s, i_u, i_v, theta, depth)
            restarted = False
            for l in range(1, l_bar + 1):
                s_plus = sizes[l]
                final = l == l_bar
                extend_sample(self.arr, lo, s, s_plus, hi, self.rng, p.randomized_sampling)
                u = self.arr[layout.u_block[0]]
                v = self.arr[layout.v_block[0]]
                layout, c = partition_step(self.arr, layout, s_plus, u, v, theta, self.cmp)
                metrics.select_partitions += 1
                metrics.partition_mass += s_plus - s
                if final:
                    g_plus = 0.0
                    i_up = i_vp = k
                else:
                    g_plus = self.gap(s_plus, n, theta)
                    i_up, i_vp = self.ranks(theta, s_plus, g_plus)
                if self.trace is not None:
                    oracle = self._oracle(lo, theta, s, s_plus, g)
                new_layout, shat, zones = self.choose_pivots(layout, i_up, i_vp, depth)
                if self.trace is not None:
                    self._record(depth, l, l_bar, n, s, s_plus, theta, g, g_plus,
                                 (i_u, i_v), (i_up, i_vp), c, shat, zones, u, v, oracle)
                if final:
                    return new_layout.u_block
                if (self.nonrec and p.restart_on_large_shat and g > 0.0
                        and shat >= 4.0 * g * s_plus / s):
                    metrics.restarts += 1
                    restarted = True
                    break
                layout = new_layout
                s, g, i_u, i_v = s_plus, g_plus, i_up, i_vp
            assert restarted

    def select_initial_pivots(self, lo, s, i_u, i_v, theta, depth):
        """Pivots of the first sample ``arr[lo:lo+s]`` as a zone layout.

        By default the upper pivot is searched only above the lower pivot's
        block; ``independent_initial_selects`` runs both selections over the
        whole sample and then classifies it against the two pivots.
        """
        if self.params.independent_initial_selects and i_u != i_v:
            e0, _, _ = self._sub(lo, lo + s, i_u, depth)
            u = self.arr[e0]
            e0, _, _ = self._sub(lo, lo + s, i_v, depth)
            v = self.arr[e0]
            single = self.cmp.compare(u, v) == 0
            layout, _ = partition_step(self.arr, ZoneLayout(lo, 0, 0, single=single),
                                       s, u, v, theta, self.cmp)
            return layout
        segs = [[lo, lo + s, _OPEN, None]]
        u_block, _ = self._locate(segs, lo, i_u, depth)
        v_block = u_block if i_v == i_u else self._locate(segs, lo, i_v, depth)[0]
        return ZoneLayout.from_blocks(lo, s, u_block, v_block)

    def choose_pivots(self, layout, i_up, i_vp, depth):
        """Next pivot pair from the zoned sample.

        A rank landing in U or V reuses the old pivot; otherwise the rank is
        shifted into L, M or R and selected there.  Returns the new layout,
        the size of the union of zones searched and the zones of both pivots.
        """
        lo = layout.lo
        segs = layout.segments()
        counts = layout.counts()
        searched = set()
        u_block, u_zone = self._locate(segs, lo, i_up, depth, searched)
        if i_vp == i_up:
            v_block, v_zone = u_block, u_zone
        else:
            v_block, v_zone = self._locate(segs, lo, i_vp, depth, searched)
        shat = sum(counts[z] for z in searched)
        return ZoneLayout.from_blocks(lo, layout.size, u_block, v_block), shat, (u_zone, v_zone)

    def _locate(self, segs, lo, i, depth, searched=None):
        pos = lo + i - 1
        for idx, (start, end, kind, zone) in enumerate(segs):
            if start <= pos < end:
                break
        else:
            raise AssertionError("rank %d falls outside every zone" % i)
        if kind == _EQ:
            return (start, end), zone
        if searched is not None:
            searched.add(zone)
        rank = pos - start + 1
        if kind == _SORTED:
            e0, e1 = sorted_block(self.arr, start, end, rank, self.cmp)
            is_sorted = True
        else:
            e0, e1, is_sorted = self._sub(start, end, rank, depth)
        rest = _SORTED if is_sorted else _OPEN
        parts = [[start, e0, rest, zone], [e0, e1, _EQ, zone], [e1, end, rest, zone]]
        segs[idx:idx + 1] = [seg for seg in parts if seg[1] > seg[0]]
        return (e0, e1), zone

    def _sub(self, start, end, rank, depth):
        variant = self.params.variant
        if variant is Variant.RECURSIVE:
            e0, e1 = self.select(start, end, rank, depth + 1)
            return e0, e1, False
        work = Work()
        if variant is Variant.NONREC_PICK:
            e0, e1 = pick_block(self.arr, start, end, rank, self.cmp, work)
            sorted_ = False
        else:
            sort_range(self.arr, start, end, self.cmp)
            work.mass += end - start
            e0, e1 = sorted_block(self.arr, start, end, rank, self.cmp)
            sorted_ = True
        self.metrics.partition_mass += work.mass
        return e0, e1, sorted_

    # -- tracing (oracle work is done with raw numpy, never counted) ------

    def _oracle(self, lo, theta, s, s_plus, g):
        j_u, j_v = bounding_ranks(theta, s, s_plus, g)
        z = np.partition(self.arr[lo:lo + s_plus], (j_u - 1, j_v - 1))
        return (j_u, j_v), z[j_u - 1], z[j_v - 1]

    def _record(self, depth, l, l_bar, n, s, s_plus, theta, g, g_plus, ranks,
                ranks_plus, c, shat, zones, u, v, oracle):
        (j_u, j_v), z_ju, z_jv = oracle
        c_bar = partition_cost_bound(theta, s, s_plus, g)
        u_clamped = ranks[0] != math.ceil(theta * s - g)
        v_clamped = ranks[1] != math.ceil(theta * s + g)
        shat_large = shat >= 4.0 * g * s_plus / s
        events = {
            "u_plus_below_u": zones[0] == "L",
            "u_below_z_ju": bool(u < z_ju),
            "v_below_v_plus": zones[1] == "R",
            "z_jv_below_v": bool(z_jv < v),
            "shat_large": shat_large,
            "cost_or_shat": c >= c_bar or shat_large,
        }
        self.trace.append(IterationTrace(
            depth=depth, l=l, l_bar=l_bar, n=n, s=s, s_plus=s_plus, theta=theta,
            g=g, g_plus=g_plus, ranks=ranks, ranks_plus=ranks_plus,
            bounding=(j_u, j_v), c=c, c_bar=c_bar, shat=shat,
            u_clamped=u_clamped, v_clamped=v_clamped, events=events))


def select(data, k, params=None, seed=0, *, rng=None, cmp=None, trace=False):
    """k-th smallest element (1-based) of ``data``.

    numpy arrays (and lists) are rearranged in place so that position
    ``k - 1`` holds the answer with no larger element before it and no
    smaller one after it.  ``rng`` overrides ``seed``.  Returns a
    :class:`Selection` with the value, its index, the run's
    :class:`~frselect.core.Metrics` and, with ``trace=True``, the list of
    per-iteration :class:`~frselect.core.IterationTrace` records.
    """
    params = Params() if params is None else params
    check_params(params)
    arr, original = _as_array(data)
    n = len(arr)
    if not 1 <= k <= n:
        raise RankError("rank %d outside 1..%d" % (k, n))
    rng = RngStream(seed) if rng is None else rng
    cmp = CountingComparator() if cmp is None else cmp
    start = cmp.count
    selector = _Selector(arr, params, rng, cmp, trace)
    limit = sys.getrecursionlimit()
    if limit < 20000:
        sys.setrecursionlimit(20000)
    try:
        e0, e1 = selector.run(k)
    finally:
        sys.setrecursionlimit(limit)
    assert e0 <= k - 1 < e1
    selector.metrics.comparisons = cmp.count - start
    if isinstance(original, list):
        original[:] = arr.tolist()
    return Selection(arr[k - 1].item(), k - 1, selector.metrics, selector.trace)

"""Baseline selection routines: PICK, sort-based selection and quickselect.

The ``*_block`` functions work in place on ``arr[lo:hi]`` with a 1-based rank
``k`` and leave the range arranged as ``< x | = x | > x`` around the answer
``x``.  They return the absolute bounds ``(e0, e1)`` of the ``= x`` block,
which the SELECT engine relies on to keep its zones exact.
"""

from functools import cmp_to_key

import numpy as np

from .core import CountingComparator, Params, RankError, Variant


# below this size PICK sorts; sorting a few dozen keys costs no more
# comparisons per key than a round of median-of-medians
PICK_SORT_BELOW = 30


class Work:
    """Partition bookkeeping shared by the block routines."""

    __slots__ = ("partitions", "mass")

    def __init__(self):
        self.partitions = 0
        self.mass = 0


def fat_partition(arr, lo, hi, pivot, cmp):
    """Three-way partition of ``arr[lo:hi]`` around ``pivot``; returns the
    bounds of the ``= pivot`` block.  Costs ``hi - lo`` comparisons."""
    seg = arr[lo:hi]
    sg = cmp.compare_to(seg, pivot)
    less = seg[sg < 0]
    eq = seg[sg == 0]
    more = seg[sg > 0]
    a = lo + len(less)
    b = a + len(eq)
    arr[lo:a] = less
    arr[a:b] = eq
    arr[b:hi] = more
    return a, b


def _median3(arr, i, j, k, cmp):
    a, b, c = arr[i], arr[j], arr[k]
    if cmp.compare(a, b) <= 0:
        if cmp.compare(b, c) <= 0:
            return j
        return k if cmp.compare(a, c) < 0 else i
    if cmp.compare(a, c) <= 0:
        return i
    return k if cmp.compare(b, c) < 0 else j


def _two(arr, lo, k, cmp):
    c = cmp.compare(arr[lo], arr[lo + 1])
    if c > 0:
        arr[lo], arr[lo + 1] = arr[lo + 1], arr[lo]
    if c == 0:
        return lo, lo + 2
    return (lo, lo + 1) if k == 1 else (lo + 1, lo + 2)


def quickselect_block(arr, lo, hi, k, cmp, rng=None, work=None):
    """Median-of-3 quickselect with fat-pivot partitioning.

    With ``rng`` the three pivot candidates are drawn at random, otherwise
    the first, middle and last positions are used.
    """
    if not 1 <= k <= hi - lo:
        raise RankError("rank %d outside 1..%d" % (k, hi - lo))
    while True:
        m = hi - lo
        if m == 1:
            return lo, hi
        if m == 2:
            return _two(arr, lo, k, cmp)
        if rng is None:
            i, j, t = lo, lo + m // 2, hi - 1
        else:
            i, j, t = lo + rng.below(m), lo + rng.below(m), lo + rng.below(m)
        p = _median3(arr, i, j, t, cmp)
        arr[lo], arr[p] = arr[p], arr[lo]
        a, b = fat_partition(arr, lo + 1, hi, arr[lo], cmp)
        if work is not None:
            work.partitions += 1
            work.mass += m - 1
        # the pivot sits at lo, just ahead of its equals; rotate it to the block end
        a -= 1
        arr[lo], arr[a] = arr[a], arr[lo]
        nl, ne = a - lo, b - a
        if k <= nl:
            hi = a
        elif k <= nl + ne:
            return a, b
        else:
            k -= nl + ne
            lo = b


def _median5(cols, cmp):
    """Vectorized median of five columns in six comparisons per group.

    Returns ``(lo1, lo2, med, hi1, hi2)``: the two elements at most the
    median, the median itself and the two elements at least the median.
    """
    a, b, c, d, e = cols

    def order(x, y):
        swap = cmp.compare_pairs(x, y) > 0
        return np.where(swap, y, x), np.where(swap, x, y)

    a, b = order(a, b)
    c, d = order(c, d)
    # the smaller of the two pair minima lies below three others: not the median
    swap = cmp.compare_pairs(a, c) > 0
    lo1 = np.where(swap, c, a)
    b, d = np.where(swap, d, b), np.where(swap, b, d)
    c = np.where(swap, a, c)
    # median of five is now the second smallest of b, c, d, e with c <= d
    b, e = order(b, e)
    swap = cmp.compare_pairs(b, c) > 0
    lo2 = np.where(swap, c, b)
    e, d = np.where(swap, d, e), np.where(swap, e, d)
    c = np.where(swap, b, c)
    # lo2 is out; the median is min(e, c), and d lies above both
    first = cmp.compare_pairs(e, c) < 0
    return lo1, lo2, np.where(first, e, c), np.where(first, c, e), d


def pick_block(arr, lo, hi, k, cmp, work=None):
    """Deterministic median-of-medians selection (groups of five).

    Elements already ordered against their group median are not compared
    with the pivot again: in a group whose median lies below the pivot the
    median and its two lower elements are known to be smaller, and
    symmetrically above.
    """
    if not 1 <= k <= hi - lo:
        raise RankError("rank %d outside 1..%d" % (k, hi - lo))
    while True:
        m = hi - lo
        if m <= PICK_SORT_BELOW:
            return sort_block(arr, lo, hi, k, cmp)
        groups = m // 5
        cols = [arr[lo + i * groups: lo + (i + 1) * groups] for i in range(5)]
        lo1, lo2, med, hi1, hi2 = _median5(cols, cmp)
        tail = arr[lo + 5 * groups:hi].copy()
        medians = med.copy()
        e0, _ = pick_block(medians, 0, groups, (groups + 1) // 2, cmp, work)
        x = medians[e0]
        # each median's side of x is fixed by the arrangement of ``medians``;
        # reading it back with numpy is bookkeeping, not new comparisons
        below, above = med < x, med > x
        at = ~(below | above)
        less = [lo1[below], lo2[below], med[below]]
        more = [med[above], hi1[above], hi2[above]]
        eq = [med[at]]
        for part in (hi1[below], hi2[below], lo1[above], lo2[above],
                     lo1[at], lo2[at], hi1[at], hi2[at], tail):
            sg = cmp.compare_to(part, x)
            less.append(part[sg < 0])
            eq.append(part[sg == 0])
            more.append(part[sg > 0])
        less, eq, more = np.concatenate(less), np.concatenate(eq), np.concatenate(more)
        a = lo + len(less)
        b = a + len(eq)
        arr[lo:a] = less
        arr[a:b] = eq
        arr[b:hi] = more
        if work is not None:
            work.partitions += 1
            work.mass += m
        nl, ne = a - lo, b - a
        if k <= nl:
            hi = a
        elif k <= nl + ne:
            return a, b
        else:
            k -= nl + ne
            lo = b


def sort_range(arr, lo, hi, cmp):
    """Sort ``arr[lo:hi]`` with the built-in list sort, every comparison
    routed through ``cmp`` (at most m*ceil(log2 m) for m keys)."""
    arr[lo:hi] = sorted(arr[lo:hi].tolist(), key=cmp_to_key(cmp.compare))


def sorted_block(arr, lo, hi, k, cmp):
    """Bounds of the run equal to the k-th element of the sorted ``arr[lo:hi]``.

    Galloping from the k-th position outwards; block size 1 costs two
    comparisons (fewer at the range ends).
    """
    p = lo + k - 1
    x = arr[p]
    # left: last known equal index and first known-smaller index below it
    eq, step = p, 1
    floor = lo - 1
    while eq - step >= lo:
        q = eq - step
        if cmp.compare(arr[q], x) < 0:
            floor = q
            break
        eq, step = q, step * 2
    else:
        floor = lo - 1
    left_lo, left_hi = floor + 1, eq
    while left_lo < left_hi:
        mid = (left_lo + left_hi) // 2
        if cmp.compare(arr[mid], x) < 0:
            left_lo = mid + 1
        else:
            left_hi = mid
    # right: mirror image
    eq, step = p, 1
    ceil = hi
    while eq + step < hi:
        q = eq + step
        if cmp.compare(arr[q], x) > 0:
            ceil = q
            break
        eq, step = q, step * 2
    else:
        ceil = hi
    right_lo, right_hi = eq + 1, ceil
    while right_lo < right_hi:
        mid = (right_lo + right_hi) // 2
        if cmp.compare(arr[mid], x) > 0:
            right_hi = mid
        else:
            right_lo = mid + 1
    return left_lo, right_lo


def sort_block(arr, lo, hi, k, cmp, work=None):
    if not 1 <= k <= hi - lo:
        raise RankError("rank %d outside 1..%d" % (k, hi - lo))
    sort_range(arr, lo, hi, cmp)
    if work is not None:
        work.partitions += 1
        work.mass += hi - lo
    return sorted_block(arr, lo, hi, k, cmp)


def _as_array(data):
    if isinstance(data, np.ndarray):
        return data, None
    arr = np.asarray(data)
    if arr.dtype == object or arr.ndim != 1:
        raise TypeError("keys must form a 1-d sequence of integers or floats")
    return arr.copy(), data


def _finish(arr, original, e0):
    if isinstance(original, list):
        original[:] = arr.tolist()
    return arr[e0].item()


def pick_select(data, k, cmp=None):
    """k-th smallest (1-based) by PICK.  numpy arrays and lists are permuted in place."""
    cmp = CountingComparator() if cmp is None else cmp
    arr, original = _as_array(data)
    e0, _ = pick_block(arr, 0, len(arr), k, cmp)
    return _finish(arr, original, e0)


def sort_select(data, k, cmp=None):
    """k-th smallest (1-based) by sorting; the range ends up sorted."""
    cmp = CountingComparator() if cmp is None else cmp
    arr, original = _as_array(data)
    if not 1 <= k <= len(arr):
        raise RankError("rank %d outside 1..%d" % (k, len(arr)))
    sort_range(arr, 0, len(arr), cmp)
    return _finish(arr, original, k - 1)


def quickselect(data, k, rng=None, cmp=None):
    """k-th smallest (1-based) by median-of-3 quickselect (FIND)."""
    cmp = CountingComparator() if cmp is None else cmp
    arr, original = _as_array(data)
    e0, _ = quickselect_block(arr, 0, len(arr), k, cmp, rng)
    return _finish(arr, original, e0)


def select_nonrecursive(data, k, params=None, seed=0, *, kind="pick", rng=None,
                        trace=False):
    """SELECT whose pivot subproblems are solved by PICK (``kind="pick"``) or
    by sorting (``kind="sort"``) instead of recursive calls."""
    from .engine import select

    variant = {"pick": Variant.NONREC_PICK, "sort": Variant.NONREC_SORT}[kind]
    params = Params(variant=variant) if params is None else params.with_(variant=variant)
    return select(data, k, params, seed, rng=rng, trace=trace)

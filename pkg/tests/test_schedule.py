import math

import pytest

from frselect import (GapMode, Params, bounding_ranks, gap, make_schedule, p_fail,
                      partition_cost_bound, pivot_ranks, schedule_capped, schedule_plain)
from frselect.schedule import capped_threshold, psi


def test_gap_sqrt_s():
    assert gap(49, 10**6, 0.5, 0.3) == pytest.approx(7.5638, abs=1e-4)


def test_gap_sqrt_n_uses_n():
    assert gap(49, 10**6, 0.5, 0.3, GapMode.SQRT_N) == pytest.approx(
        math.sqrt(0.3 * 49 * math.log(10**6)))


def test_gap_knuth():
    assert gap(100, 10**6, 0.5, 0.3, GapMode.KNUTH) == pytest.approx(15.1743, abs=1e-4)
    assert gap(100, 10**6, 0.9, 0.3, GapMode.KNUTH) == pytest.approx(
        math.sqrt(0.1 * 100 * math.log(100)))


@pytest.mark.parametrize("mode", list(GapMode))
def test_final_gap_is_zero(mode):
    assert gap(1000, 10**6, 0.3, 0.3, mode, final=True) == 0.0


def test_gap_rejects_tiny_samples():
    with pytest.raises(ValueError):
        gap(1, 100, 0.5, 0.3)


def test_pivot_ranks():
    assert tuple(pivot_ranks(0.5, 49, 7.5638)) == (17, 33)
    assert tuple(pivot_ranks(0.01, 100, 10)) == (1, 11)
    assert tuple(pivot_ranks(1.0, 10, 2)) == (8, 10)


def test_bounding_ranks():
    assert tuple(bounding_ranks(0.5, 49, 7056, 7.5638)) == (1350, 5707)
    assert tuple(bounding_ranks(0.5, 49, 7056, 0.0)) == (3528, 3528)
    assert bounding_ranks(0.001, 10, 100, 5).j_u == 1


def test_plain_schedule():
    s = schedule_plain(10**4)
    assert s.sizes == (100, 10**4) and s.l_bar == 1 and not s.capped
    s = schedule_plain(10**6)
    assert s.sizes == (1000, 144000, 10**6) and s.l_bar == 2
    s = schedule_plain(2)
    assert s.sizes[0] == 1 and s.sizes[-1] == 2
    with pytest.raises(ValueError):
        schedule_plain(1)


def test_capped_schedule_at_one_million():
    s = schedule_capped(10**6, 0.5, 144, 2 / 144)
    assert s.capped and s.l_bar == 2
    assert s.sizes == (49, 7056, 10**6)
    assert s.sampled / 10**6 == pytest.approx(0.007056)


def test_capped_threshold_boundary():
    assert capped_threshold(0.5, 144, 2 / 144) == pytest.approx(20736)
    assert not schedule_capped(20735, 0.5, 144, 2 / 144).capped
    assert schedule_capped(20736, 0.5, 144, 2 / 144).capped


def test_make_schedule_follows_params():
    assert make_schedule(10**6, Params()).sizes == (49, 7056, 10**6)
    plain = Params(schedule_mode="plain")
    assert make_schedule(10**6, plain).sizes == (1000, 144000, 10**6)


def test_capped_sizes_grow_by_r2():
    for n in (20736, 50_000, 123_457, 10**6, 4 * 10**6):
        sizes = schedule_capped(n, 0.5, 144, 2 / 144).sizes
        assert sizes[-1] == n
        assert all(b == 144 * a for a, b in zip(sizes[:-2], sizes[1:-1]))
        assert sizes[-2] < (1 / 144 + n ** -0.5) * n


def test_p_fail_sqrt_n():
    expected = 2 * 1e6 ** -0.6 + 2 * 1e6 ** (-0.6 * 121 / 144)
    assert p_fail(0.3, 1 / 12, 10**6, GapMode.SQRT_N) == pytest.approx(expected)
    assert p_fail(0.3, 1 / 12, 10**6, GapMode.SQRT_N) == pytest.approx(2.39e-3, abs=1e-5)


def test_p_fail_sqrt_s():
    s = 7056
    ps = (1 - (1 / 12) * math.sqrt(1 + math.log(144) / math.log(s))) ** 2
    assert psi(s, 1 / 12) == pytest.approx(ps)
    assert p_fail(0.3, 1 / 12, s) == pytest.approx(2 * s ** -0.6 + 2 * s ** (-0.6 * ps))


def test_p_fail_clamped():
    assert p_fail(1e-9, 1 / 12, 100, GapMode.SQRT_N) == 1.0


def test_partition_cost_bound():
    assert partition_cost_bound(0.5, 49, 7056, 7.5638) == pytest.approx(
        1.5 * 7007 + 3 * 7.5638 * 144)
    assert partition_cost_bound(0.3, 50, 50, 4.0) == pytest.approx(12.0)
    assert partition_cost_bound(0.0, 10, 100, 0.0) == pytest.approx(90.0)

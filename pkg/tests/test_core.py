import math

import numpy as np
import pytest

from frselect import CountingComparator, GapMode, Params, Variant, check_params, f, validate_params
from frselect.core import Metrics


def test_compare_outcomes_and_count():
    cmp = CountingComparator()
    assert cmp.compare(2, 5) == -1
    assert cmp.compare(7, 7) == 0
    assert cmp.compare(9, 3) == 1
    assert cmp.count == 3


def test_compare_numpy_scalars():
    cmp = CountingComparator()
    a = np.array([4, 4, 1])
    assert cmp.compare(a[0], a[1]) == 0
    assert cmp.compare(a[2], a[0]) == -1


def test_batched_compare_is_charged_per_element():
    cmp = CountingComparator()
    signs = cmp.compare_to(np.array([1, 5, 9, 5]), 5)
    assert signs.tolist() == [-1, 0, 1, 0]
    assert cmp.count == 4
    signs = cmp.compare_pairs(np.array([1, 2]), np.array([2, 2]))
    assert signs.tolist() == [-1, 0]
    assert cmp.count == 6
    cmp.reset()
    assert cmp.count == 0


def test_default_preset_is_valid():
    p = Params()
    assert validate_params(p) == []
    assert p.eta_bar == pytest.approx(2 / 144)
    assert p.beta_min == pytest.approx(0.25 * 144 / 121)
    assert p.beta_min <= 0.3


def test_small_beta_rejected_for_sqrt_n():
    errors = validate_params(Params(beta=0.25, gap_mode=GapMode.SQRT_N))
    assert len(errors) == 1 and "beta" in errors[0]


def test_eta_bar_boundary_rejected():
    assert validate_params(Params(eta_bar=1 / 144))
    assert not validate_params(Params(eta_bar=1.0))


def test_other_constraints():
    assert validate_params(Params(alpha=0.7))
    assert validate_params(Params(r2=1))
    assert validate_params(Params(n_cut=0))
    assert validate_params(Params(restart_on_large_shat=True, randomized_sampling=False))
    with pytest.raises(ValueError):
        check_params(Params(beta=0.0))


def test_knuth_preset_needs_no_beta_check():
    p = Params.knuth_emulation()
    assert p.gap_mode is GapMode.KNUTH and p.r2 == 2 and not p.randomized_sampling
    assert validate_params(p) == []


def test_string_enums_coerced():
    p = Params(gap_mode="sqrt-n", variant="nonrec-sort", schedule_mode="plain")
    assert p.gap_mode is GapMode.SQRT_N
    assert p.variant is Variant.NONREC_SORT
    assert p.with_(beta=0.4).beta == 0.4


def test_scale_function():
    assert f(1) == 0.0
    assert f(100) == pytest.approx(math.sqrt(100 * math.log(100)))


def test_metrics_helpers():
    m = Metrics(comparisons=1600, sselect_calls=4, sselect_partitions=10)
    assert m.partitions_per_sselect == 2.5
    assert m.gamma(1000) == pytest.approx(100 / f(1000))
    assert m.as_dict()["comparisons"] == 1600

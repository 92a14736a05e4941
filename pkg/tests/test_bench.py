import math

import numpy as np
import pytest

from frselect import (InputSpec, OracleMismatch, Params, RngStream, emit_table, generate,
                      hypergeometric_check, run_experiment, validate_bounds)
from frselect import bench
from frselect.bounds import iteration_bounds
from frselect.tables import HEADER


def test_generators():
    assert generate("organpipe", 6).tolist() == [1, 2, 3, 3, 2, 1]
    assert generate("organpipe", 5).tolist() == [1, 2, 3, 2, 1]
    assert generate("sorted", 3).tolist() == [1, 2, 3]
    x = generate("onezero", 5, RngStream(0))
    assert sorted(x.tolist()) == [0, 0, 1, 1, 1]
    x = generate("random", 1000, RngStream(0))
    assert sorted(x.tolist()) == list(range(1, 1001))
    assert x.dtype == np.int64
    with pytest.raises(ValueError):
        generate("sorted", 0)


@pytest.mark.parametrize("n", [1, 2, 7, 10, 1001])
def test_generator_cardinalities(n):
    assert generate("onezero", n, RngStream(n)).sum() == math.ceil(n / 2)
    pipe = generate("organpipe", n)
    assert np.array_equal(pipe, pipe[::-1]) and len(pipe) == n


def test_input_spec_rank():
    assert InputSpec("random", 10).rank == 5
    assert InputSpec("random", 11).rank == 6
    assert InputSpec("sorted", 11, 3).rank == 3
    with pytest.raises(ValueError):
        InputSpec("sorted", 5, 6)


def test_onezero_million():
    report = run_experiment(InputSpec("onezero", 10**6), trials=20)
    for value in (report.c_avg, report.c_max, report.c_min):
        assert round(value, 2) == 1.50


def test_random_hundred_thousand():
    report = run_experiment(InputSpec("random", 10**5), trials=20)
    assert report.c_avg == pytest.approx(1.79, abs=0.06)
    assert report.c_max <= 1.85 + 0.05
    assert report.c_min >= 1.70 - 0.05


def test_report_is_reproducible():
    spec = InputSpec("random", 50_000)
    a = run_experiment(spec, trials=1, master_seed=9)
    b = run_experiment(spec, trials=1, master_seed=9)
    assert a.records[0].metrics == b.records[0].metrics
    assert a.records[0].value == b.records[0].value


def test_serial_and_parallel_agree():
    spec = InputSpec("random", 30_000)
    a = run_experiment(spec, trials=4, master_seed=2, workers=1)
    b = run_experiment(spec, trials=4, master_seed=2, workers=2)
    assert [r.metrics for r in a.records] == [r.metrics for r in b.records]


def test_aggregates_are_exact():
    report = run_experiment(InputSpec("random", 40_000), trials=3)
    comps = [r.metrics.comparisons for r in report.records]
    assert report.c_avg == pytest.approx(np.mean(comps) / 40_000)
    assert report.c_max == max(comps) / 40_000
    assert report.gamma_avg == pytest.approx((np.mean(comps) - 60_000) / math.sqrt(
        40_000 * math.log(40_000)))


def test_oracle_mismatch_is_fatal(monkeypatch):
    real = bench.select

    def broken(*args, **kwargs):
        sel = real(*args, **kwargs)
        return sel._replace(value=sel.value + 1)

    monkeypatch.setattr(bench, "select", broken)
    with pytest.raises(OracleMismatch):
        run_experiment(InputSpec("sorted", 1000), trials=2)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        run_experiment(InputSpec("sorted", 10), trials=0)


def test_emit_table_csv():
    report = run_experiment(InputSpec("onezero", 10**5), trials=2)
    text = emit_table([report], "csv", no_time=True)
    lines = text.split("\n")
    assert lines[0].split(",") == HEADER
    row = lines[1].split(",")
    assert row[:2] == ["onezero", "100000"]
    assert row[2:5] == ["0.00"] * 3
    assert row[5:8] == ["1.50", "1.50", "1.50"]
    assert text.endswith("\n") and "\r" not in text


def test_emit_table_empty_and_text():
    assert emit_table([], "csv") == ",".join(HEADER) + "\n"
    report = run_experiment(InputSpec("sorted", 5000), trials=1)
    text = emit_table([report], "table")
    assert text.splitlines()[1].startswith("sorted")
    with pytest.raises(ValueError):
        emit_table([], "xml")


def test_hypergeometric_tail():
    check = hypergeometric_check(100, 50, 30, 5.0, 100_000, seed=1)
    assert check.bound == pytest.approx(math.exp(-50 / 30))
    assert check.ok
    # the exact tail P[X >= 20] for 30 draws from 50/50 is about 2.4%
    assert 0.015 < check.frequency < 0.035


def test_validate_bounds_small():
    report = validate_bounds(InputSpec("random", 200_000), trials=30, master_seed=4)
    assert report.ok
    assert {s.event for s in report.stats} >= {"u_plus_below_u", "shat_large", "cost_or_shat"}


def test_validate_bounds_clamp_case():
    report = validate_bounds(InputSpec("random", 100_000, 1), trials=10)
    assert report.clamp_skips > 0
    top = {(s.l, s.event) for s in report.stats if s.group == "top"}
    assert (1, "u_plus_below_u") not in top
    assert report.ok


def test_iteration_bounds_use_closed_forms():
    n = 10**6
    rng = RngStream(0)
    x = generate("random", n, rng)
    from frselect import select
    rec = select(x, n // 2, rng=rng, trace=True).trace[0]
    b = iteration_bounds(rec, Params())
    assert b["u_below_z_ju"] == pytest.approx(math.exp(-2 * rec.g ** 2 / rec.s))
    assert b["u_below_z_ju"] == pytest.approx(rec.s ** -0.6)
    shift = rec.g - rec.g_plus * rec.s / rec.s_plus
    assert b["u_plus_below_u"] == pytest.approx(math.exp(-2 * shift ** 2 / rec.s))

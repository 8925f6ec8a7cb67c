from __future__ import annotations

import time

from hivekit.sweep import (SweepConfig, criterion_direction, criterion_hive_lr, hive_triples,
                           quadruples, sweep_verify_all)


def test_sweep_n2_bound2_passes_quickly():
    t = time.perf_counter()
    rep = sweep_verify_all(2, 2, seed=0)
    assert rep.passed, [c.to_json() for c in rep.criteria if not c.passed]
    assert time.perf_counter() - t < 30
    assert [c.key for c in rep.criteria] == [f"C{i}" for i in range(1, 10)]


def test_report_lists_counts_and_counterexample_slot():
    rep = sweep_verify_all(2, 1, seed=0).to_json()
    c1 = rep["criteria"][0]
    assert c1["detail"]["counts"] and c1["counterexample"] is None


def test_reversed_orientation_fails_sweep():
    cfg = SweepConfig.scaled(2, 2)
    bad = criterion_hive_lr(cfg, orientation=-1)
    assert not bad.passed and bad.counterexample is not None
    assert not criterion_direction(cfg, baseline=bad).passed


def test_scaled_config_shapes_the_sweep():
    cfg = SweepConfig.scaled(4, 3)
    assert cfg.n_max == 3 and cfg.supplement_n == 4 and cfg.supplement_bound == 2
    assert max(len(t[0]) for t in hive_triples(cfg)) == 4
    assert {len(q[0]) for q in quadruples(cfg)} == {2, 3}

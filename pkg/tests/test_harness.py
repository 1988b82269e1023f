import json
import math
import random

import numpy as np
import pytest

from stopset.codes import Enumerator, catalog, rm_8_4_4
from stopset.harness import (
    ChannelConfig,
    _erasure_masks,
    analytic_pud,
    monte_carlo,
    table1_report,
)
from stopset.stopsets import dead_end_enumerator, incorrigible_enumerator

from conftest import random_code_where, random_dual_spanning_matrix

RM = rm_8_4_4()


def test_channel_config_validation():
    with pytest.raises(ValueError):
        ChannelConfig(epsilon=0.0, trials=10, seed=1)
    with pytest.raises(ValueError):
        ChannelConfig(epsilon=1.0, trials=10, seed=1)
    with pytest.raises(ValueError):
        ChannelConfig(epsilon=0.5, trials=0, seed=1)


def test_analytic_single_term():
    e = Enumerator((0, 0, 0, 0, 1))  # x^4
    assert analytic_pud(e, 0.3) == pytest.approx(0.3**4)


def test_analytic_total_probability():
    n = 9
    e = Enumerator(tuple(math.comb(n, i) for i in range(n + 1)))
    for eps in (0.1, 0.37, 0.9):
        assert analytic_pud(e, eps) == pytest.approx(1.0)


def test_analytic_rm_incorrigible():
    eps = 0.2
    expected = (
        14 * eps**4 * (1 - eps) ** 4
        + 56 * eps**5 * (1 - eps) ** 3
        + 28 * eps**6 * (1 - eps) ** 2
        + 8 * eps**7 * (1 - eps)
        + eps**8
    )
    assert analytic_pud(incorrigible_enumerator(RM), eps) == pytest.approx(expected)


def test_analytic_validation():
    with pytest.raises(ValueError):
        analytic_pud(Enumerator((1, 0)), 0.5, n=5)
    with pytest.raises(ValueError):
        analytic_pud(Enumerator((1, 0)), 1.5)


def test_analytic_it_dominates_opt():
    rng = random.Random(70)
    for _ in range(10):
        code = random_code_where(rng, range(2, 10), range(1, 6), lambda c: c.k >= 1)
        h = random_dual_spanning_matrix(rng, code, rng.randrange(0, 3))
        for eps in (0.05, 0.4, 0.8):
            it = analytic_pud(dead_end_enumerator(h), eps)
            opt = analytic_pud(incorrigible_enumerator(code), eps)
            assert it >= opt - 1e-15


def test_erasure_stream_partition_independent():
    whole = _erasure_masks(99, 0, 10000, 8, 0.3)
    pieces = np.concatenate(
        [_erasure_masks(99, a, b, 8, 0.3) for a, b in [(0, 37), (37, 5000), (5000, 10000)]]
    )
    assert np.array_equal(whole, pieces)


def test_monte_carlo_reproducible():
    cfg = ChannelConfig(epsilon=0.3, trials=2000, seed=12345)
    r1 = monte_carlo(RM, catalog("H_4"), cfg)
    r2 = monte_carlo(RM, catalog("H_4"), cfg)
    assert r1 == r2


def test_monte_carlo_single_trial():
    cfg = ChannelConfig(epsilon=0.3, trials=1, seed=7)
    rep = monte_carlo(RM, catalog("H_8"), cfg)
    assert rep.it_failures in (0, 1) and rep.opt_failures in (0, 1)
    assert rep == monte_carlo(RM, catalog("H_8"), cfg)


def test_monte_carlo_agreement_with_analytic():
    cfg = ChannelConfig(epsilon=0.5, trials=20000, seed=2024)
    rep = monte_carlo(RM, catalog("H_8"), cfg)
    for emp, ana in [(rep.empirical_it, rep.analytic_it), (rep.empirical_opt, rep.analytic_opt)]:
        sigma = math.sqrt(ana * (1 - ana) / cfg.trials)
        assert abs(emp - ana) <= 4 * sigma
    assert rep.analytic_it == pytest.approx(107 / 256)  # all dead-end sets weighted 2^-8


def test_monte_carlo_event_equality_when_optimal():
    # D(x) = I(x) for H_8, so the two decoders fail on exactly the same trials
    cfg = ChannelConfig(epsilon=0.5, trials=5000, seed=5)
    rep = monte_carlo(RM, catalog("H_8"), cfg)
    assert rep.it_only_failures == 0
    assert rep.it_failures == rep.opt_failures


def test_monte_carlo_failure_sets_nest():
    cfg = ChannelConfig(epsilon=0.4, trials=5000, seed=6)
    rep = monte_carlo(RM, catalog("H_4"), cfg)
    assert rep.it_only_failures == rep.it_failures - rep.opt_failures
    assert rep.it_failures >= rep.opt_failures


def test_monte_carlo_small_epsilon_dominant_term():
    cfg = ChannelConfig(epsilon=1e-3, trials=100000, seed=8)
    rep = monte_carlo(RM, catalog("H_8"), cfg)
    assert rep.empirical_it <= 1e-3
    # at small epsilon the failure probability is close to S_s eps^s
    assert rep.analytic_it == pytest.approx(rep.dominant_it, rel=0.05)
    assert rep.dominant_it == pytest.approx(14 * 1e-12, rel=1e-9)


def test_monte_carlo_rejects_foreign_matrix():
    with pytest.raises(ValueError):
        monte_carlo(RM, catalog("hamming_7_4").parity_basis, ChannelConfig(0.1, 10, 1))


def test_report_json_shape():
    rep = monte_carlo(RM, catalog("H_8"), ChannelConfig(0.25, 100, 3))
    obj = rep.to_json_obj()
    text = json.dumps(obj)
    assert json.loads(text)["failures"]["iterative"] == rep.it_failures


def test_table1_ok_and_flags():
    rep = table1_report()
    assert rep.ok
    flags = dict(rep.flags)
    assert flags["h14_stopping_enumerator_is_optimal"]
    assert flags["h8_dead_end_is_incorrigible"]
    assert flags["h14_dead_end_is_incorrigible"]
    assert flags["star_dead_end_is_incorrigible"]
    assert len(rep.entries) == 12
    assert all(e.match for e in rep.entries)


def test_table1_detects_mismatch(monkeypatch):
    import stopset.harness as harness_mod

    monkeypatch.setattr(harness_mod, "_TABLE1_A", (1, 0, 0, 0, 13, 0, 0, 0, 1))
    rep = harness_mod.table1_report()
    assert not rep.ok
    assert "MISMATCH" in rep.render_pretty()

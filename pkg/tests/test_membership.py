import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kloospath.membership import (
    Status,
    brute_force_verdict,
    certified_cutoff,
    check_alpha_sequence,
    check_polygonal,
    check_polygonal_general,
    classify_prime,
    classify_verdicts,
    path_verdict,
    swiss_table_statistic,
)
from kloospath.modarith import kloosterman_family
from kloospath.pathcore import (
    PolyPath,
    kloosterman_path,
    padded_birch_path,
    padded_character_path,
    padded_kloosterman_path,
    spike_path,
    swiss_clock_path,
)
from kloospath.speccoef import coeff_table, tilde_table

small = st.sampled_from([5, 7, 11, 13, 17, 19, 23])


def _invariants(v):
    if v.status is Status.NOT_IN_S:
        assert (v.witness_h is not None and v.witness_value > 2 + 1e-9) or not v.f1_ok or not v.symmetry_ok
    if v.status is Status.IN_S_EASY:
        assert v.witness_value <= 2 + 1e-9


def test_examples():
    assert check_polygonal(kloosterman_path(8, 1, 19)).status is Status.NOT_IN_S
    v = check_polygonal(spike_path())
    assert v.in_S and abs(v.witness_value - 4 / np.pi) < 1e-12
    assert path_verdict(17, 8, 1, "swiss", "exact").status is Status.NOT_IN_S
    assert brute_force_verdict(spike_path(), 100).in_S
    assert check_polygonal_general(padded_character_path(13)).in_S


def test_unequal_spacing_rejected():
    with pytest.raises(ValueError):
        check_polygonal(padded_kloosterman_path(1, 1, 7))


def test_brute_force_witness_class():
    fast = check_polygonal(kloosterman_path(8, 1, 19))
    slow = brute_force_verdict(kloosterman_path(8, 1, 19), 19 * 18)
    assert slow.status is Status.NOT_IN_S
    assert slow.witness_h % 18 == fast.witness_h % 18
    assert abs(slow.witness_value - fast.witness_value) < 1e-9


@settings(max_examples=40, deadline=None)
@given(small, st.integers(1, 10 ** 4), st.integers(1, 10 ** 4))
def test_residue_reduction_matches_oracle_any_b(p, a, b):
    if a % p == 0 or b % p == 0:
        return
    for path in (kloosterman_path(a, b, p), swiss_clock_path(a, b, p)):
        fast, slow = check_polygonal(path), brute_force_verdict(path, p * path.n)
        assert fast.status is slow.status
        assert abs(fast.witness_value - slow.witness_value) < 1e-9
        _invariants(fast)


@pytest.mark.parametrize("p", [5, 7, 13])
def test_certified_cutoff_against_oracle(p):
    for a in range(1, p):
        for path in (padded_kloosterman_path(a, 1, p), padded_birch_path(a, p)):
            H = certified_cutoff(path)
            fast = check_polygonal_general(path)
            slow = brute_force_verdict(path, 10 * H)
            assert fast.status is slow.status
            assert abs(fast.witness_value - slow.witness_value) < 1e-12


@settings(max_examples=30, deadline=None)
@given(small, st.integers(1, 10 ** 4), st.sampled_from([-1.0, -0.5, 0.5]))
def test_balanced(p, a, lam):
    if a % p == 0:
        return
    path = kloosterman_path(a, 1, p)
    if check_polygonal(path).in_S:
        assert check_polygonal(path.scaled(lam)).in_S


@settings(max_examples=30, deadline=None)
@given(small, st.integers(1, 10 ** 4), st.integers(1, 10 ** 4))
def test_conjugation(p, a, b):
    if a % p == 0 or b % p == 0:
        return
    path = kloosterman_path(a, b, p)
    assert check_polygonal(path.conjugate()).status is check_polygonal(path).status


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([5, 7, 13, 29]), st.integers(1, 10 ** 4), st.integers(0, 2 ** 32 - 1))
def test_fourier_contraction(p, a, seed):
    if a % p == 0:
        return
    path = kloosterman_path(a, 1, p)
    if not check_polygonal(path).in_S:
        return
    table = coeff_table(path, 3 * p)
    mask = np.random.default_rng(seed).random(len(table.h)) < 0.5
    alpha = np.where(mask, 0.0, table.alpha.real)
    assert check_alpha_sequence((table.h, alpha), path.f1.real, 2.0).in_S


def test_alpha_sequence_examples():
    h = np.concatenate([-np.arange(400, 0, -1), np.arange(1, 401)])
    riemann = np.where(np.round(np.sqrt(np.abs(h))) ** 2 == np.abs(h), 1.0, 0.0)
    assert check_alpha_sequence((h, riemann), 0.0, 1.0).status is Status.IN_S_ANALYTIC
    zero = {int(k): 0.0 for k in h}
    assert check_alpha_sequence(zero, 0.0, 0.0).in_S
    assert check_alpha_sequence(zero, 0.0, None).status is Status.UNKNOWN
    assert check_alpha_sequence(zero, 0.0, 3.0).status is Status.UNKNOWN
    v = check_alpha_sequence({1: 1.0, 2: -2.5}, 0.0, 1.0)
    assert v.status is Status.NOT_IN_S and v.witness_h == 2
    assert not check_alpha_sequence({1: 0.0}, 2.5, 0.0).f1_ok
    assert not check_alpha_sequence({1: 0.5j}, 0.0, 0.0).symmetry_ok


def test_borderline_flag():
    v = check_alpha_sequence({1: 2.0, -1: -2.0}, 0.0, 0.0)
    assert v.in_S and v.borderline
    v = check_alpha_sequence({1: 2.0 + 5e-10}, 0.0, 0.0)
    assert v.in_S and v.borderline
    assert check_alpha_sequence({1: 2.0 + 2e-9}, 0.0, 0.0).status is Status.NOT_IN_S


def test_not_in_s_when_asymmetric():
    path = PolyPath.equally_spaced([0, 0.3, 0.4 + 0.2j])
    v = check_polygonal(path)
    assert v.status is Status.NOT_IN_S and not v.symmetry_ok


@pytest.mark.parametrize("p", [7, 17, 23])
def test_swiss_identity_with_shifted_parameter(p):
    """The true Swiss step sum is cos Kl(a-h) - 2 sin Im Klm(a-h)."""
    kl, klm = kloosterman_family(1, p)
    for a in range(1, p):
        table = tilde_table(swiss_clock_path(a, 1, p))
        for h in range(1, p):
            c = (a - h) % p
            x = np.pi * h / p
            expected = np.cos(x) * kl[c] - 2 * np.sin(x) * klm[c].imag
            assert abs(table.at(h) - expected) < 1e-12
    stat = swiss_table_statistic(kl[3], klm[3], p, np.arange(1, p))
    assert stat.shape == (p - 1,)


def test_classify_thread_independence_and_counts():
    rows = {t: classify_prime(23, 1, "plain", "exact", threads=t) for t in (1, 2, 4)}
    assert len({r.astuple() for r in rows.values()}) == 1
    assert sum(rows[1].astuple()) == 22
    verdicts = classify_verdicts(19, 1, "swiss", "table", threads=3)
    assert [a for a, _ in verdicts] == list(range(1, 19))


def test_classify_rejects_composite():
    with pytest.raises(ValueError):
        classify_prime(21)
    with pytest.raises(ValueError):
        classify_prime(13, b=26)


def test_verdict_json():
    v = path_verdict(19, 8, 1)
    rec = json.loads(v.to_json(p=19, a=8, b=1, kind="plain"))
    assert rec["status"] == "NotInS" and rec["witness_h"] is not None and rec["p"] == 19

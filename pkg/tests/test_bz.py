from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hivekit import weights as W
from hivekit.bz import (BZDatum, check_edge_inequalities, check_monotone, check_tropical_plucker,
                        coweight, enumerate_mv, is_mv, mv_conditions, polytope_contained, vertices)
from hivekit.hive import enumerate_hives
from hivekit.phi import hive_to_bz
from strategies import consistent_triples, coweights


def datum(n, table):
    return BZDatum.from_mapping(n, {W.mask_of(k): v for k, v in table.items()})


D2 = datum(2, {(): 0, (1,): 1, (2,): 0, (1, 2): 1})


def test_plucker_vacuous_for_n2():
    assert check_tropical_plucker(datum(2, {(1,): 5, (2,): -3, (1, 2): 7})) == []


@given(st.integers(2, 4).flatmap(lambda n: st.lists(st.integers(-4, 4), min_size=n, max_size=n)))
def test_linear_data_satisfy_everything(mu):
    M = BZDatum.linear(mu)
    assert check_tropical_plucker(M) == []
    assert check_edge_inequalities(M) == []
    assert set(vertices(M).values()) == {tuple(mu)}
    assert coweight(M) == (tuple(mu), tuple(mu))


def test_edge_examples():
    assert check_edge_inequalities(D2) == []
    bad = check_edge_inequalities(datum(2, {(1,): 0, (2,): 1, (1, 2): 0}))
    assert ((1, 2), 1, 1) in bad


def test_vertices_and_containment_examples():
    assert coweight(D2) == ((1, 0), (1, 0))
    assert polytope_contained(D2, (1, 0))
    assert not polytope_contained(D2, (0, 0))
    assert polytope_contained(D2, (1, 0), shift=(1, 1))
    assert check_monotone(D2) == []


@given(st.integers(2, 4).flatmap(lambda n: coweights(n, -3, 3)))
def test_linear_dominant_is_monotone(mu):
    assert check_monotone(BZDatum.linear(mu)) == []


@pytest.mark.parametrize("lam, mu, nu, count", [
    ((2, 1, 0), (2, 1, 0), (3, 2, 1), 2), ((1, 0), (1, 0), (2, 0), 1), ((1, 0), (1, 0), (5, 0), 0),
])
def test_enumerate_examples(lam, mu, nu, count):
    for method in ("propagate", "brute"):
        data = enumerate_mv(lam, mu, nu, method=method)
        assert len(data) == count
    if count == 1 and len(lam) == 2:
        (M,) = data
        assert (M[(1,)], M[(2,)]) == (1, 0)


@given(consistent_triples(n_max=3, hi=2))
def test_brute_and_propagate_agree(t):
    assert enumerate_mv(*t, method="brute") == enumerate_mv(*t, method="propagate")


@given(consistent_triples(n_max=4, hi=2))
def test_enumerated_data_are_mv_with_expected_coweight(t):
    lam, mu, nu = t
    for M in enumerate_mv(lam, mu, nu):
        assert all(mv_conditions(M, lam, mu, nu).values())
        assert is_mv(M, lam, mu, nu)
        assert check_monotone(M) == []
        assert coweight(M) == (tuple(a - b for a, b in zip(nu, mu)), tuple(lam))


def test_datum_from_hive_passes_relations():
    for F in enumerate_hives((2, 1, 0), (2, 1, 0), (3, 2, 1)):
        M = hive_to_bz(F)
        assert check_tropical_plucker(M) == [] and check_edge_inequalities(M) == []


def test_is_mv_agrees_with_conditions_on_perturbations():
    lam, mu, nu = (2, 1, 0), (2, 1, 0), (3, 2, 1)
    for M in enumerate_mv(lam, mu, nu):
        for m, delta in itertools.product(W.chamber_weights(3), (-1, 1)):
            vals = list(M.values)
            vals[m] += delta
            N = BZDatum(3, tuple(vals))
            assert is_mv(N, lam, mu, nu) == all(mv_conditions(N, lam, mu, nu).values())


def test_json_round_trip_and_validation():
    data = json.loads(D2.dumps())
    assert BZDatum.from_json(data) == D2
    with pytest.raises(ValueError):
        BZDatum.from_mapping(2, {1: 0, 2: 0})
    with pytest.raises(ValueError):
        BZDatum(2, (1, 0, 0, 0))


def test_brute_rejects_large_n():
    with pytest.raises(ValueError):
        enumerate_mv((1, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0), method="brute")

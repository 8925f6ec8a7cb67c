from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hivekit import weights as W
from hivekit.bz import BZDatum, enumerate_mv
from hivekit.hive import Hive, boundary, enumerate_hives, points
from hivekit.phi import (PropagationConflict, bz_to_hive, hive_to_bz, min_formula,
                         verify_phi_bijection)
from strategies import consistent_triples


def test_forward_example():
    M = BZDatum.from_mapping(2, {1: 1, 2: 0, 3: 1})
    F = bz_to_hive(M, (2, 0))
    assert dict(F.items()) == {(0, 0, 2): 0, (1, 0, 1): 0, (2, 0, 0): 1, (0, 1, 1): 0, (0, 2, 0): 2,
                               (1, 1, 0): 1}
    assert boundary(F) == ((1, 0), (1, 0), (2, 0))


def test_zero_datum_gives_zero_hive():
    assert bz_to_hive(BZDatum.linear((0, 0, 0)), (0, 0, 0)) == Hive.constant(3)


def test_inverse_example_n2():
    (F,) = enumerate_hives((1, 0), (1, 0), (2, 0))
    M = hive_to_bz(F)
    assert (M[(1,)], M[(2,)], M[(1, 2)]) == (1, 0, 1)


def test_inverse_rejects_non_hive():
    F = Hive.from_mapping(2, {(0, 0, 2): 0, (1, 0, 1): 0, (2, 0, 0): 1, (0, 1, 1): 1, (0, 2, 0): 2,
                              (1, 1, 0): 3})
    with pytest.raises(ValueError):
        hive_to_bz(F)


def test_conflict_is_a_value_error():
    assert issubclass(PropagationConflict, ValueError)


@pytest.mark.parametrize("t, count", [
    (((2, 1, 0), (2, 1, 0), (3, 2, 1)), 2), (((1, 0), (1, 0), (2, 0)), 1), (((1, 0), (1, 0), (5, 0)), 0),
    (((2, 1, 0, 0), (2, 1, 0, 0), (3, 2, 1, 0)), None),
])
def test_verify_examples(t, count):
    rep = verify_phi_bijection(*t)
    assert rep.ok
    if count is not None:
        assert rep.mv_count == rep.hive_count == count


@given(consistent_triples(n_max=4, hi=2), st.integers(0, 2**32))
def test_round_trip_independent_of_traversal(t, seed):
    for F in enumerate_hives(*t):
        M = hive_to_bz(F)
        assert hive_to_bz(F, rng=random.Random(seed)) == M
        assert bz_to_hive(M, t[2]) == F


@given(consistent_triples(n_max=4, hi=2))
def test_min_formula_reproduces_hive(t):
    nu = t[2]
    for F in enumerate_hives(*t):
        M = hive_to_bz(F)
        for p in points(F.n):
            assert min_formula(M, nu, p) == F[p]


def test_min_formula_corners():
    M = enumerate_mv((2, 1, 0), (2, 1, 0), (3, 2, 1))[0]
    nu = (3, 2, 1)
    assert min_formula(M, nu, (3, 0, 0)) == M[W.full_mask(3)]
    assert min_formula(M, nu, (0, 3, 0)) == sum(nu)
    with pytest.raises(ValueError):
        min_formula(M, nu, (1, 1, 0))
